#include "symq/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "symq/error.hpp"

namespace symq::io {
namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error(errc::parse_error, where + ": missing field '" + key + "'");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& f = field(j, key, where);
  if (!f.is_number_integer())
    throw Error(errc::parse_error, where + ": field '" + key + "' must be an integer");
  return f.get<int>();
}

Complex parse_entry(const json& e, const std::string& where) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  throw Error(errc::parse_error,
              where + ": matrix entries must be numbers or [re, im] pairs");
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(errc::parse_error, "cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw Error(errc::parse_error, "'" + path + "' is not valid JSON");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw Error(errc::parse_error, "cannot write '" + path + "'");
  out << text;
}

Matrix parse_matrix(const json& j) {
  const std::string where = "matrix";
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw Error(errc::parse_error, where + ": expected an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[static_cast<size_t>(r)].is_array() ||
        static_cast<int>(j[static_cast<size_t>(r)].size()) != cols)
      throw Error(errc::parse_error, where + ": ragged rows");
    for (int c = 0; c < cols; ++c)
      m(r, c) = parse_entry(j[static_cast<size_t>(r)][static_cast<size_t>(c)], where);
  }
  return m;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json spectrum_json(const Spectrum& s) {
  json j;
  json vals = json::array();
  for (Complex v : s.eigenvalues) vals.push_back(complex_json(v));
  j["eigenvalues"] = std::move(vals);
  j["multiplicities"] = s.multiplicities;
  return j;
}

Matrix load_operator(const std::string& path) {
  json j = load_json(path);
  const int rows = int_field(j, "rows", path);
  const int cols = int_field(j, "cols", path);
  Matrix m = parse_matrix(field(j, "entries", path));
  if (m.rows() != rows || m.cols() != cols)
    throw Error(errc::parse_error,
                path + ": entries shape does not match rows/cols");
  return m;
}

PermGroup parse_group(const json& j) {
  const std::string where = "group";
  const int degree = int_field(j, "degree", where);
  const json& gens = field(j, "generators", where);
  if (!gens.is_object())
    throw Error(errc::parse_error, where + ": 'generators' must be an object");
  std::vector<std::pair<std::string, Perm>> generators;
  for (const auto& [name, value] : gens.items()) {
    if (!value.is_array())
      throw Error(errc::parse_error,
                  where + ": generator '" + name + "' must be a permutation array");
    Perm p;
    for (const auto& v : value) {
      if (!v.is_number_integer())
        throw Error(errc::parse_error,
                    where + ": generator '" + name + "' has a non-integer entry");
      p.push_back(v.get<int>());
    }
    generators.emplace_back(name, std::move(p));
  }
  return PermGroup::close(degree, generators);
}

PermGroup load_group(const std::string& path) {
  return parse_group(load_json(path));
}

Representation parse_representation(const json& j, const PermGroup& group) {
  const std::string where = "representation";
  const int degree = int_field(j, "degree", where);
  const json& images = field(j, "images", where);
  if (!images.is_object())
    throw Error(errc::parse_error, where + ": 'images' must be an object");
  std::map<std::string, Matrix> parsed;
  for (const auto& [name, value] : images.items())
    parsed[name] = parse_matrix(value);
  return Representation::build(group, degree, parsed);
}

Representation load_representation(const std::string& selector,
                                   const PermGroup& group) {
  if (selector == "trivial") return Representation::trivial(group);
  if (selector == "regular") return Representation::regular(group);
  if (selector == "permutation") return Representation::permutation(group);
  if (selector.rfind("sign:", 0) == 0) {
    std::vector<std::string> negated;
    std::stringstream ss(selector.substr(5));
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) negated.push_back(item);
    if (negated.empty())
      throw Error(errc::parse_error,
                  "sign representation needs at least one generator name");
    for (const std::string& name : negated) {
      const auto& gens = group.generators();
      const bool known =
          std::any_of(gens.begin(), gens.end(),
                      [&](const auto& g) { return g.first == name; });
      if (!known)
        throw Error(errc::parse_error,
                    "sign representation: unknown generator '" + name + "'");
    }
    return Representation::sign(group, negated);
  }
  return parse_representation(load_json(selector), group);
}

Subgroup parse_subgroup(const json& j, const PermGroup& parent) {
  const std::string where = "subgroup";
  const json& words = field(j, "generator_words", where);
  if (!words.is_array())
    throw Error(errc::parse_error, where + ": 'generator_words' must be an array");
  std::map<std::string, Perm> gen_perms;
  for (const auto& [name, perm] : parent.generators()) gen_perms[name] = perm;

  std::vector<int> elements;
  for (const auto& word : words) {
    if (!word.is_array())
      throw Error(errc::parse_error, where + ": each word must be an array of names");
    Perm p = perm_identity(parent.degree());
    for (const auto& name : word) {
      if (!name.is_string())
        throw Error(errc::parse_error, where + ": generator names must be strings");
      auto it = gen_perms.find(name.get<std::string>());
      if (it == gen_perms.end())
        throw Error(errc::parse_error,
                    where + ": unknown generator '" + name.get<std::string>() + "'");
      p = perm_compose(p, it->second);
    }
    elements.push_back(parent.index_of(p));
  }
  return subgroup_generated_by(parent, elements);
}

Subgroup load_subgroup(const std::string& path, const PermGroup& parent) {
  return parse_subgroup(load_json(path), parent);
}

Partition parse_partition(const json& j) {
  const json& blocks = field(j, "blocks", "partition");
  if (!blocks.is_array())
    throw Error(errc::parse_error, "partition: 'blocks' must be an array");
  Partition partition;
  for (const auto& block : blocks) {
    if (!block.is_array())
      throw Error(errc::parse_error, "partition: each block must be an array");
    std::vector<int> indices;
    for (const auto& v : block) {
      if (!v.is_number_integer())
        throw Error(errc::parse_error, "partition: indices must be integers");
      indices.push_back(v.get<int>());
    }
    partition.push_back(std::move(indices));
  }
  return partition;
}

Partition load_partition(const std::string& path) {
  return parse_partition(load_json(path));
}

QuantumGraphFile load_quantum_graph(const std::string& path) {
  json j = load_json(path);
  QuantumGraphFile out;
  const json& edges = field(j, "edges", path);
  if (!edges.is_array() || edges.empty())
    throw Error(errc::parse_error, path + ": 'edges' must be a non-empty array");
  std::map<std::string, int> edge_index;
  for (const auto& e : edges) {
    MetricEdge edge;
    const json& id = field(e, "id", path);
    if (!id.is_string())
      throw Error(errc::parse_error, path + ": edge ids must be strings");
    edge.id = id.get<std::string>();
    const json& len = field(e, "len", path);
    if (!len.is_number())
      throw Error(errc::parse_error, path + ": edge lengths must be numbers");
    edge.length = len.get<double>();
    if (e.contains("potential")) {
      if (!e["potential"].is_number())
        throw Error(errc::parse_error, path + ": potentials must be numbers");
      edge.potential = e["potential"].get<double>();
    }
    edge_index[edge.id] = out.graph.edge_count();
    out.graph.edges.push_back(std::move(edge));
  }
  validate(out.graph);

  const json& cond = field(j, "conditions", path);
  if (cond.contains("named")) {
    std::vector<NamedVertex> vertices;
    for (const auto& v : cond["named"]) {
      NamedVertex vertex;
      const json& type = field(v, "type", path);
      if (!type.is_string())
        throw Error(errc::parse_error, path + ": vertex types must be strings");
      vertex.type = type.get<std::string>();
      for (const auto& slot : field(v, "slots", path)) {
        if (!slot.is_array() || slot.size() != 2 || !slot[0].is_string() ||
            !slot[1].is_number_integer())
          throw Error(errc::parse_error,
                      path + ": slots must be [edgeId, 0|1] pairs");
        auto it = edge_index.find(slot[0].get<std::string>());
        if (it == edge_index.end())
          throw Error(errc::parse_error,
                      path + ": unknown edge id '" + slot[0].get<std::string>() + "'");
        vertex.slots.emplace_back(it->second, slot[1].get<int>());
      }
      vertices.push_back(std::move(vertex));
    }
    out.conditions = conditions_from_named(out.graph, vertices);
  } else if (cond.contains("A") && cond.contains("B")) {
    out.conditions.a = parse_matrix(cond["A"]);
    out.conditions.b = parse_matrix(cond["B"]);
    const int n = out.graph.slot_count();
    if (out.conditions.a.rows() != n || out.conditions.a.cols() != n ||
        out.conditions.b.rows() != n || out.conditions.b.cols() != n)
      throw Error(errc::parse_error,
                  path + ": A and B must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  } else {
    throw Error(errc::parse_error,
                path + ": 'conditions' needs either 'named' or 'A'/'B'");
  }
  return out;
}

EdgeSymmetry parse_edge_symmetry(const json& j, const MetricGraph& graph) {
  const std::string where = "edge symmetry";
  const json& gens = field(j, "generators", where);
  if (!gens.is_object())
    throw Error(errc::parse_error, where + ": 'generators' must be an object");
  std::map<std::string, int> edge_index;
  for (int e = 0; e < graph.edge_count(); ++e)
    edge_index[graph.edges[static_cast<size_t>(e)].id] = e;

  std::vector<EdgeMapGenerator> generators;
  for (const auto& [name, value] : gens.items()) {
    if (!value.is_array() ||
        static_cast<int>(value.size()) != graph.edge_count())
      throw Error(errc::parse_error,
                  where + ": generator '" + name + "' must list an image for "
                  "each of the " + std::to_string(graph.edge_count()) + " edges");
    EdgeMapGenerator gen;
    gen.name = name;
    for (const auto& image : value) {
      if (!image.is_string())
        throw Error(errc::parse_error,
                    where + ": images must be edge ids (with optional '-')");
      std::string id = image.get<std::string>();
      bool reversed = !id.empty() && id[0] == '-';
      if (reversed) id = id.substr(1);
      auto it = edge_index.find(id);
      if (it == edge_index.end())
        throw Error(errc::parse_error, where + ": unknown edge id '" + id + "'");
      gen.target.push_back(it->second);
      gen.reversed.push_back(reversed);
    }
    generators.push_back(std::move(gen));
  }
  return edge_symmetry(graph, generators);
}

EdgeSymmetry load_edge_symmetry(const std::string& path,
                                const MetricGraph& graph) {
  return parse_edge_symmetry(load_json(path), graph);
}

SubgroupPair load_pair(const std::string& path, const PermGroup& parent) {
  json j = load_json(path);
  const auto dir = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& ref) {
    return (dir / ref).string();
  };
  auto ref = [&](const char* key) {
    const json& f = field(j, key, path);
    if (!f.is_string())
      throw Error(errc::parse_error,
                  path + ": field '" + std::string(key) + "' must be a string");
    return f.get<std::string>();
  };

  Subgroup h1 = load_subgroup(resolve(ref("H1")), parent);
  Subgroup h2 = load_subgroup(resolve(ref("H2")), parent);

  auto load_sigma = [&](const char* key, const Subgroup& h) {
    std::string selector = ref(key);
    PermGroup standalone = h.as_group().group;
    // Builtins pass through unchanged; files resolve relative to the pair.
    if (selector == "trivial" || selector == "regular" ||
        selector == "permutation" || selector.rfind("sign:", 0) == 0)
      return load_representation(selector, standalone);
    return load_representation(resolve(selector), standalone);
  };
  Representation sigma1 = load_sigma("sigma1", h1);
  Representation sigma2 = load_sigma("sigma2", h2);
  return SubgroupPair{std::move(h1), std::move(h2), std::move(sigma1),
                      std::move(sigma2)};
}

json blocks_json(const std::vector<KernelBasis::OrbitBlock>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    json block;
    block["representative"] = b.representative;
    block["offset"] = b.offset;
    block["dimension"] = b.dimension;
    block["stabilizer_order"] = b.stabilizer_order;
    out.push_back(std::move(block));
  }
  return out;
}

json quotient_result_json(const QuotientResult& result) {
  json j;
  j["d"] = static_cast<int>(result.matrix.rows());
  j["hermitian"] = result.hermitian;
  j["blocks"] = blocks_json(result.basis.blocks);
  json d_list = json::array();
  for (const auto& b : result.basis.blocks) d_list.push_back(b.dimension);
  j["d_list"] = std::move(d_list);
  j["matrix"] = matrix_json(result.matrix);
  return j;
}

}  // namespace symq::io
