#ifndef SEMIRED_TOOLS_RENDER_HPP_
#define SEMIRED_TOOLS_RENDER_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "semired/semigroup.hpp"
#include "semired/syntactic.hpp"
#include "semired/varieties.hpp"
#include "semired/verify.hpp"

namespace semired::cli {

using Json = nlohmann::ordered_json;

// Cayley table with element labels as row and column headers.
std::string render_table(const FiniteSemigroup& s);

// Strict pairs of the order, one "[u] <= [v]" per line.
std::string render_order(const FiniteSemigroup& s);

// R, L, J and H classes, one relation per line.
std::string render_green(const FiniteSemigroup& s);

// Each element's class language: every word when finite and short, else the
// shortlex-first words followed by "...".
std::string render_classes(const SyntacticPresentation& sp);

std::string render_report(const VerificationReport& report);
Json report_json(const VerificationReport& report, bool timing);

std::string render_assignment(const FiniteSemigroup& s, const GeneratorMap& g);
Json witness_json(const Witness& w);

}  // namespace semired::cli

#endif  // SEMIRED_TOOLS_RENDER_HPP_
