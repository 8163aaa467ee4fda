#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tcm/classical.hpp"
#include "tcm/ergodic.hpp"
#include "tcm/farey.hpp"
#include "tcm/torus.hpp"
#include "tcm/tropical.hpp"

namespace tcm::io {

// Serialization glue shared by the CLI and the export paths. Big
// integers and rationals always travel as decimal strings ("p/q" for
// rationals) since they exceed native JSON number ranges.

std::string triple_json(const MarkovTriple& t);  // ["x","y","z"]
std::string triple_json(const EuclidTriple& t);
std::string point_json(const TropPoint3& p);     // ["u/q","v/q","w/q"]
std::string matrix_json(const IntMatrix2& m);    // [[a,b],[c,d]]
std::string report_json(const EstimatorReport& rep);

std::string point_csv_row(const TropPoint3& p);  // "u,v,w" with p/q entries

// CSV of a Markov path: header n,x,y,z then one row per triple.
std::string markov_path_csv(const std::vector<MarkovTriple>& path);
std::string euclid_path_csv(const std::vector<EuclidTriple>& path);

// CSV of a lambda series: header k,lambda_k.
std::string lambda_csv(const LambdaSeries& series);

// Write text to a file atomically (temp file in the same directory, then
// rename). Throws IoError on failure.
void atomic_write(const std::string& path, const std::string& content);

} // namespace tcm::io
