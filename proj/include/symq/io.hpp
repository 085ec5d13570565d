#pragma once

#include <string>

#include <json.hpp>

#include "symq/divisors.hpp"
#include "symq/group.hpp"
#include "symq/isospectral.hpp"
#include "symq/linalg.hpp"
#include "symq/quantum_graph.hpp"
#include "symq/quotient.hpp"
#include "symq/representation.hpp"

namespace symq::io {

// ordered_json keeps object keys in file/insertion order, which both makes
// generator order deterministic on input and output byte-stable.
using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws Error(errc::parse_error) with the
/// path on any failure.
json load_json(const std::string& path);

/// Canonical serialization: two-space indent plus trailing newline; floats in
/// shortest round-trip form.  Identical data always yields identical bytes.
std::string dump(const json& j);

/// Writes text to a file, or to stdout when the path is empty or "-".
void write_text(const std::string& path, const std::string& text);

// --- matrices ---------------------------------------------------------------

/// Rows of entries; each entry is a plain number (real) or an [re, im] pair.
Matrix parse_matrix(const json& j);
json matrix_json(const Matrix& m);  ///< always [re, im] pairs
json complex_json(Complex z);
json spectrum_json(const Spectrum& s);

/// {"rows": n, "cols": n, "entries": [...]}
Matrix load_operator(const std::string& path);

// --- groups and representations ---------------------------------------------

/// {"degree": p, "generators": {"name": [one-line permutation], ...}}
PermGroup parse_group(const json& j);
PermGroup load_group(const std::string& path);

/// {"degree": r, "images": {"generatorName": matrix, ...}}
Representation parse_representation(const json& j, const PermGroup& group);

/// `selector` is "trivial", "sign:<gen,gen,...>", "regular", "permutation",
/// or a path to a representation file.
Representation load_representation(const std::string& selector,
                                   const PermGroup& group);

/// {"generator_words": [["r","s","r"], ...]}; words multiply left to right
/// (rightmost factor acts first).  An empty list gives the trivial subgroup.
Subgroup parse_subgroup(const json& j, const PermGroup& parent);
Subgroup load_subgroup(const std::string& path, const PermGroup& parent);

/// {"blocks": [[indices], ...]}
Partition parse_partition(const json& j);
Partition load_partition(const std::string& path);

// --- quantum graphs ----------------------------------------------------------

struct QuantumGraphFile {
  MetricGraph graph;
  VertexConditions conditions;
};

/// {"edges": [{"id": "e1", "len": 1.0, "potential": 0.0}, ...],
///  "conditions": {"named": [{"type": "neumann", "slots": [["e1", 0], ...]}]}
///                or {"A": matrix, "B": matrix}}
QuantumGraphFile load_quantum_graph(const std::string& path);

/// {"generators": {"name": ["e2", "-e1", ...], ...}}: the i-th entry names
/// the image of the i-th edge, with a "-" prefix when the image is traversed
/// in reverse.
EdgeSymmetry parse_edge_symmetry(const json& j, const MetricGraph& graph);
EdgeSymmetry load_edge_symmetry(const std::string& path,
                                const MetricGraph& graph);

// --- isospectrality -----------------------------------------------------------

/// {"H1": "h1.json", "H2": "h2.json", "sigma1": "trivial", "sigma2": ...};
/// file references are resolved relative to the pair file's directory, and
/// the sigmas live on the standalone subgroup groups.
SubgroupPair load_pair(const std::string& path, const PermGroup& parent);

// --- reports -----------------------------------------------------------------

json blocks_json(const std::vector<KernelBasis::OrbitBlock>& blocks);
json quotient_result_json(const QuotientResult& result);

}  // namespace symq::io
