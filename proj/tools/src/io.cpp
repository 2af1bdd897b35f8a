#include "entdist/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace entdist::io {
namespace {

using nlohmann::json;

constexpr double kSlack = 1e-6;

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

Complex parse_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw ParseError("matrix entries must be numbers or [re, im] pairs");
}

DensityMatrix parse_factor(const json& f, const FactorShape& shape) {
  if (!f.is_array()) throw ParseError("factor must be a list of entries");
  std::vector<Complex> entries;
  entries.reserve(f.size());
  for (const auto& e : f) entries.push_back(parse_entry(e));
  const std::size_t d = shape.total_dim();
  if (entries.size() == d) {
    double norm2 = 0.0;
    for (const auto& a : entries) norm2 += std::norm(a);
    if (std::abs(std::sqrt(norm2) - 1.0) > kSlack) throw StateError("ket is not normalized");
    return pure_to_density(PureState::normalized(shape, std::move(entries)));
  }
  if (entries.size() != d * d) {
    throw DimensionError("factor has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(d) +
                         " or " + std::to_string(d * d));
  }
  ComplexMatrix m(d, d, std::move(entries));
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kSlack) throw StateError("density matrix trace is not 1");
  m *= Complex(1.0 / tr.real());
  return {shape, m};
}

FactorShape parse_party_shape(const json& p, const std::string& name) {
  const json& dims_json = field(p, "dims");
  if (!dims_json.is_array() || dims_json.empty()) throw ParseError("party dims must be a non-empty list");
  std::vector<std::size_t> dims;
  for (const auto& d : dims_json) {
    if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError("party dims must be non-negative integers");
    dims.push_back(d.get<std::size_t>());
  }
  std::vector<std::string> labels;
  if (p.contains("labels")) {
    const json& l = p.at("labels");
    if (!l.is_array()) throw ParseError("labels must be a list of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("labels must be a list of strings");
      labels.push_back(s.get<std::string>());
    }
  } else if (dims.size() == 1) {
    labels.push_back(name);
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) labels.push_back(name + std::to_string(i + 1));
  }
  return {dims, labels};
}

SeparableEnsemble parse_ensemble(const json& doc) {
  const json& parties_json = field(doc, "parties");
  const json& terms_json = field(doc, "terms");
  if (!parties_json.is_array() || !terms_json.is_array()) throw ParseError("parties and terms must be lists");

  std::vector<SeparableEnsemble::Party> parties;
  for (const auto& p : parties_json) {
    const json& name = field(p, "name");
    if (!name.is_string()) throw ParseError("party name must be a string");
    parties.push_back({name.get<std::string>(), parse_party_shape(p, name.get<std::string>())});
  }

  std::vector<SeparableEnsemble::Term> terms;
  double total = 0.0;
  for (const auto& t : terms_json) {
    const json& prob = field(t, "prob");
    const json& factors = field(t, "factors");
    if (!prob.is_number()) throw ParseError("prob must be a number");
    if (!factors.is_array()) throw ParseError("factors must be a list");
    if (factors.size() != parties.size()) {
      throw DimensionError("term has " + std::to_string(factors.size()) + " factors for " +
                           std::to_string(parties.size()) + " parties");
    }
    SeparableEnsemble::Term term{prob.get<double>(), {}};
    for (std::size_t i = 0; i < parties.size(); ++i) term.factors.push_back(parse_factor(factors[i], parties[i].shape));
    total += term.prob;
    terms.push_back(std::move(term));
  }
  if (std::abs(total - 1.0) <= kSlack && total > 0.0) {
    for (auto& t : terms) t.prob /= total;
  }
  return {std::move(parties), std::move(terms)};
}

json matrix_json(const ComplexMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return out;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

SeparableEnsemble read_ensemble(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_ensemble(doc);
}

SeparableEnsemble load_ensemble(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_ensemble(in);
}

void write_ensemble(std::ostream& out, const SeparableEnsemble& ensemble) {
  json doc;
  doc["parties"] = json::array();
  for (const auto& p : ensemble.parties()) {
    doc["parties"].push_back({{"name", p.name}, {"dims", p.shape.dims()}, {"labels", p.shape.labels()}});
  }
  doc["terms"] = json::array();
  for (const auto& t : ensemble.terms()) {
    json factors = json::array();
    for (const auto& f : t.factors) factors.push_back(matrix_json(f.matrix()));
    doc["terms"].push_back({{"prob", t.prob}, {"factors", factors}});
  }
  out << doc.dump(1) << '\n';
}

void save_ensemble(const std::string& path, const SeparableEnsemble& ensemble) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_ensemble(out, ensemble);
}

Cut parse_cut(const std::string& spec) {
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto bar = s.find('|');
  if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos) {
    throw ParseError("cut must look like \"A,B1|B2\"");
  }
  auto side = [](const std::string& part) {
    LabelSet out;
    std::stringstream ss(part);
    std::string label;
    while (std::getline(ss, label, ',')) {
      if (label.empty()) throw ParseError("empty label in cut");
      out.push_back(label);
    }
    if (out.empty() || part.back() == ',') throw ParseError("empty side in cut");
    return out;
  };
  return {side(s.substr(0, bar)), side(s.substr(bar + 1))};
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  out << "param,en_before,en_after,delta\n";
  for (const auto& r : table.rows) {
    out << format_real(r.param) << ',' << format_real(r.en_before) << ',' << format_real(r.en_after) << ','
        << format_real(r.delta) << '\n';
  }
}

SweepTable read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "param,en_before,en_after,delta") {
    throw ParseError("sweep CSV header must be param,en_before,en_after,delta");
  }
  SweepTable table{"param", {}};
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    double v[4];
    std::stringstream ss(line);
    std::string cell;
    int k = 0;
    while (std::getline(ss, cell, ',')) {
      if (k == 4) throw ParseError("line " + std::to_string(lineno) + ": too many columns");
      std::size_t used = 0;
      try {
        v[k] = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size()) throw ParseError("line " + std::to_string(lineno) + ": bad number");
      ++k;
    }
    if (k != 4) throw ParseError("line " + std::to_string(lineno) + ": expected 4 columns");
    table.rows.push_back({v[0], v[1], v[2], v[3]});
  }
  return table;
}

}  // namespace entdist::io
