#pragma once

#include <iosfwd>
#include <string>

#include "entdist/errors.hpp"
#include "entdist/negativity.hpp"
#include "entdist/scenarios.hpp"
#include "entdist/state.hpp"

namespace entdist::io {

// Malformed text: bad JSON, missing fields, unreadable files, bad CSV.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Ensemble files are JSON:
//
//   {"parties": [{"name": "A", "dims": [2]},
//                {"name": "B", "dims": [2, 2], "labels": ["B1", "B2"]}],
//    "terms": [{"prob": 0.5, "factors": [F_A, F_B]}, ...]}
//
// Each factor is a flat row-major list of [re, im] pairs (a bare number is a
// real entry). A list of d entries is a ket, d*d entries a density matrix.
// Labels default to the party name for one factor and name1, name2, ...
// otherwise. Kets, traces and weights off by at most 1e-6 are renormalized.
SeparableEnsemble read_ensemble(std::istream& in);
SeparableEnsemble load_ensemble(const std::string& path);
void write_ensemble(std::ostream& out, const SeparableEnsemble& ensemble);
void save_ensemble(const std::string& path, const SeparableEnsemble& ensemble);

// "A,B1|B2"; whitespace is ignored. Throws ParseError.
Cut parse_cut(const std::string& spec);

// header param,en_before,en_after,delta then one %.12g row per point, LF endings.
void write_sweep_csv(std::ostream& out, const SweepTable& table);
SweepTable read_sweep_csv(std::istream& in);

// %.12g
std::string format_real(double x);

}  // namespace entdist::io
