#pragma once

#include "umt/ballean.hpp"
#include "umt/ballmap.hpp"
#include "umt/reptree.hpp"
#include "umt/space.hpp"

#include <string>
#include <vector>

namespace umt {

// Space input: JSON {"points": [...], "dist": [[...]]} or CSV (header row of
// point names, then the matrix). Matrix entries are Scalar strings ("3",
// "0.5", "1/2"); JSON also accepts bare integers. Syntax problems (bad JSON,
// wrong types, unreadable file) throw Error; metric violations come back in
// the ValidationReport.
ValidationResult parse_space_json(const std::string& text);
ValidationResult parse_space_csv(const std::string& text);
// Sniffs the format: first non-blank byte '{' means JSON, anything else CSV.
ValidationResult parse_space(const std::string& text);
ValidationResult load_space(const std::string& path);

std::string space_to_json(const UltrametricSpace& s);
std::string space_to_csv(const UltrametricSpace& s);

std::string validation_report_to_json(const ValidationReport& rep);
std::string validation_report_to_text(const ValidationReport& rep);

// Tree exports. `names` maps point indices to display names.
std::string tree_to_json(const RepTree& t, const std::vector<std::string>& names);
std::string tree_to_dot(const RepTree& t, const std::vector<std::string>& names);
std::string tree_to_newick(const RepTree& t, const std::vector<std::string>& names);

std::string ballean_to_json(const Ballean& b, const HasseDigraph& h,
                            const std::vector<std::string>& names);
std::string ballean_to_text(const Ballean& b, const HasseDigraph& h,
                            const std::vector<std::string>& names);

// Witness format: one JSON object, {"a": "p", ...}, point name of the first
// space -> point name of the second. Keys must cover the first space exactly;
// values must name points of the second. Throws Error otherwise (bijectivity
// is checked by the consumer).
std::string witness_to_json(const PointBijection& f, const UltrametricSpace& x,
                            const UltrametricSpace& y);
PointBijection parse_witness_json(const std::string& text, const UltrametricSpace& x,
                                  const UltrametricSpace& y);

std::string read_file(const std::string& path);  // throws Error

}  // namespace umt
