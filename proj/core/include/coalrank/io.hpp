#pragma once

#include <string>

#include "coalrank/axioms.hpp"
#include "coalrank/model.hpp"

namespace coalrank {

// Canonical ranking file, format_version 1. Classes are written best-first
// to match the usual display convention; in-memory storage is worst-first,
// and these two functions are the only conversion point.
//
//   {
//     "format_version": 1,
//     "individuals": ["A", "B"],                  // optional extra universe
//     "classes_best_to_worst": [
//       [ {"members": ["A", "B"], "multiplicity": 2} ],
//       [ {"members": ["B"]} ]                    // multiplicity defaults to 1
//     ]
//   }

CoalitionalRanking ranking_from_json_text(const std::string& text);
std::string ranking_to_json_text(const CoalitionalRanking& r);
CoalitionalRanking load_ranking_file(const std::string& path);
void save_ranking_file(const CoalitionalRanking& r, const std::string& path);

// Witness files embed the ranking document(s) plus the axiom's auxiliary
// objects, enough to replay the failing check bit-for-bit.
AxiomInstance witness_from_json_text(const std::string& text);
std::string witness_to_json_text(const AxiomInstance& instance);
AxiomInstance load_witness_file(const std::string& path);
void save_witness_file(const AxiomInstance& instance, const std::string& path);

}  // namespace coalrank
