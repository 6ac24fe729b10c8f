#pragma once

// Structure-constants files (UTF-8 JSON):
//
//   {
//     "name": "taft3",
//     "dim": 9,
//     "cyclotomic_order": 3,
//     "basis": ["1", "x", ...],
//     "mult":   [[i, j, k, scalar], ...],
//     "comult": [[i, j, k, scalar], ...],
//     "unit":   [scalar, ...],
//     "counit": [scalar, ...],
//     "antipode": [[scalar, ...], ...]      (optional; row c is S(e_c))
//   }
//
// A scalar is either an integer (number, or decimal string when it does
// not fit in 64 bits) or {"num": [a_0, ..., a_{phi(N)-1}], "den": d}
// meaning (a_0 + a_1 z + ...) / d in the power basis of Q(zeta_N).

#include <filesystem>
#include <string>
#include <string_view>

#include "hopf_forge/hopf.hpp"

namespace hopf_forge {

/// Throws ParseError on malformed JSON or a missing/mistyped field, and the
/// HopfPresentation errors (MalformedTensor, ...) on inconsistent content.
HopfPresentation parse_hopf_json(std::string_view text);
HopfPresentation load_hopf_file(const std::filesystem::path& path);

/// Canonical text: fixed key order, one structure entry per line, entries
/// sorted. Parsing and re-serializing canonical text is byte-identical.
std::string serialize_hopf_json(const HopfPresentation& h);
void save_hopf_file(const HopfPresentation& h, const std::filesystem::path& path);

/// A scalar in compact JSON text.
std::string format_scalar(const CycNumber& x);
CycNumber parse_scalar(std::string_view json_text, int order);

}  // namespace hopf_forge
