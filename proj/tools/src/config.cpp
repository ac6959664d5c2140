// Copyright 2026 The hqsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "hqsa_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>

#include "hqsa/errors.hpp"
#include "hqsa/lattice.hpp"
#include "hqsa/pauli.hpp"

namespace hqsa::cli {

namespace {

using json = nlohmann::ordered_json;

std::size_t line_of(const YAML::Node& n) {
  return n.Mark().is_null() ? 0 : static_cast<std::size_t>(n.Mark().line + 1);
}

std::size_t column_of(const YAML::Node& n) {
  return n.Mark().is_null() ? 0 : static_cast<std::size_t>(n.Mark().column + 1);
}

[[noreturn]] void fail(const YAML::Node& at, const std::string& message) {
  throw ParseError(message, line_of(at), column_of(at));
}

[[noreturn]] void invalid(const YAML::Node& at, const std::string& message) {
  throw ValidationError(message + " at line " + std::to_string(line_of(at)) + ", column " +
                        std::to_string(column_of(at)));
}

void expect_map(const YAML::Node& n, const std::string& what) {
  if (!n.IsMap()) fail(n, what + " must be a mapping");
}

void allow_keys(const YAML::Node& map, std::initializer_list<std::string_view> keys) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) fail(kv.first, "unknown key '" + key + "'");
  }
}

YAML::Node require(const YAML::Node& map, const std::string& key) {
  const YAML::Node n = map[key];
  if (!n) fail(map, "missing key '" + key + "'");
  return n;
}

double as_double(const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) fail(n, what + " must be a number");
  try {
    return n.as<double>();
  } catch (const YAML::BadConversion&) {
    fail(n, what + " must be a number, got '" + n.Scalar() + "'");
  }
}

long long as_int(const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) fail(n, what + " must be an integer");
  try {
    return n.as<long long>();
  } catch (const YAML::BadConversion&) {
    fail(n, what + " must be an integer, got '" + n.Scalar() + "'");
  }
}

std::string as_string(const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) fail(n, what + " must be a string");
  return n.Scalar();
}

std::vector<std::size_t> as_qubits(const YAML::Node& n, std::size_t register_size) {
  if (!n.IsSequence()) fail(n, "qubits must be a list");
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (const auto& q : n) {
    const long long v = as_int(q, "qubit");
    if (v < 1 || static_cast<std::size_t>(v) > register_size) {
      invalid(q, "qubit " + std::to_string(v) + " outside 1.." + std::to_string(register_size));
    }
    if (!seen.insert(static_cast<std::size_t>(v)).second) invalid(q, "repeated qubit");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Edge as_edge(const YAML::Node& n) {
  if (!n.IsSequence() || n.size() != 2) fail(n, "edge must be a pair [u, v]");
  const long long a = as_int(n[0], "edge endpoint");
  const long long b = as_int(n[1], "edge endpoint");
  if (a == b) invalid(n, "self-loop edge");
  return make_edge(static_cast<int>(a), static_cast<int>(b));
}

// Library validation errors gain the location of the offending section.
template <class Fn>
auto located(const YAML::Node& at, Fn&& fn) {
  try {
    return fn();
  } catch (const NotTwoColourable&) {
    throw;
  } catch (const ValidationError& e) {
    invalid(at, e.what());
  } catch (const DimensionError& e) {
    invalid(at, e.what());
  } catch (const std::invalid_argument& e) {
    invalid(at, e.what());
  }
}

InteractionGraph parse_graph_node(const YAML::Node& h) {
  const bool has_lattice = static_cast<bool>(h["lattice"]);
  const bool has_graph = static_cast<bool>(h["graph"]);
  if (has_lattice == has_graph) fail(h, "hamiltonian needs exactly one of 'lattice' or 'graph'");
  if (has_lattice) {
    const auto dims = h["lattice"];
    if (!dims.IsSequence() || dims.size() != 2) fail(dims, "lattice must be [rows, cols]");
    const auto rows = as_int(dims[0], "lattice rows");
    const auto cols = as_int(dims[1], "lattice cols");
    return located(dims, [&] { return square_lattice(static_cast<int>(rows), static_cast<int>(cols)); });
  }
  const auto g = h["graph"];
  expect_map(g, "graph");
  allow_keys(g, {"vertices", "edges"});
  const auto vertices = as_int(require(g, "vertices"), "vertex count");
  std::vector<Edge> edges;
  if (const auto list = g["edges"]) {
    if (!list.IsSequence()) fail(list, "edges must be a list");
    for (const auto& e : list) edges.push_back(located(e, [&] { return as_edge(e); }));
  }
  return located(g, [&] { return InteractionGraph(static_cast<int>(vertices), edges); });
}

CouplingTable parse_couplings(const YAML::Node& node, const InteractionGraph& graph) {
  if (node.IsScalar()) return CouplingTable::uniform(graph, as_double(node, "coupling"));
  if (!node.IsSequence()) fail(node, "couplings must be a number or a list");
  CouplingTable table;
  for (const auto& entry : node) {
    expect_map(entry, "coupling entry");
    allow_keys(entry, {"edge", "J"});
    const Edge e = located(entry, [&] { return as_edge(require(entry, "edge")); });
    if (!table.j.emplace(e, as_double(require(entry, "J"), "J")).second) {
      invalid(entry, "duplicate coupling entry");
    }
  }
  return table;
}

Gate parse_gate(const YAML::Node& node, std::size_t qubit) {
  if (node.IsScalar()) {
    const auto name = node.Scalar();
    return located(node, [&] { return Gate::named(name, qubit); });
  }
  expect_map(node, "gate");
  allow_keys(node, {"theta", "phi", "lambda"});
  const double theta = as_double(require(node, "theta"), "theta");
  const double phi = node["phi"] ? as_double(node["phi"], "phi") : 0.0;
  const double lambda = node["lambda"] ? as_double(node["lambda"], "lambda") : 0.0;
  return Gate::bloch(theta, phi, lambda, qubit);
}

std::vector<Gate> parse_layer(const YAML::Node& node, std::size_t n, const std::string& what) {
  if (!node) return identity_layer(n);
  if (!node.IsSequence()) fail(node, what + " must be a list of gates");
  if (node.size() != n) {
    invalid(node, what + " needs one gate per qubit (" + std::to_string(n) + ")");
  }
  std::vector<Gate> layer;
  for (std::size_t q = 0; q < n; ++q) layer.push_back(parse_gate(node[q], q + 1));
  return layer;
}

Matrix parse_complex_matrix(const YAML::Node& node) {
  if (!node.IsSequence() || node.size() == 0) fail(node, "Kraus matrix must be a list of rows");
  const auto dim = static_cast<Eigen::Index>(node.size());
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto row = node[static_cast<std::size_t>(i)];
    if (!row.IsSequence() || static_cast<Eigen::Index>(row.size()) != dim) {
      fail(row, "Kraus matrix must be square");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto x = row[static_cast<std::size_t>(j)];
      if (x.IsSequence()) {
        if (x.size() != 2) fail(x, "complex entry must be [re, im]");
        m(i, j) = {as_double(x[0], "real part"), as_double(x[1], "imaginary part")};
      } else {
        m(i, j) = as_double(x, "matrix entry");
      }
    }
  }
  return m;
}

std::map<std::string, double> parse_probabilities(const YAML::Node& node) {
  if (!node.IsMap()) fail(node, "probabilities must map Pauli strings to numbers");
  std::map<std::string, double> out;
  for (const auto& kv : node) {
    out[as_string(kv.first, "Pauli string")] = as_double(kv.second, "probability");
  }
  return out;
}

ComplianceMode parse_mode(const YAML::Node& node) {
  const auto name = as_string(node, "mode");
  if (name == "model_compliant") return ComplianceMode::model_compliant;
  if (name == "unconstrained") return ComplianceMode::unconstrained;
  fail(node, "mode must be 'model_compliant' or 'unconstrained'");
}

json scalar_to_json(const YAML::Node& n) {
  const auto& text = n.Scalar();
  if (n.Tag() == "!") return text;  // quoted
  if (text == "true") return true;
  if (text == "false") return false;
  if (text == "null" || text == "~" || text.empty()) return nullptr;
  long long i = 0;
  if (YAML::convert<long long>::decode(n, i)) return i;
  double d = 0.0;
  if (YAML::convert<double>::decode(n, d)) return d;
  return text;
}

YAML::Node load_yaml(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line + 1),
                     static_cast<std::size_t>(e.mark.column + 1));
  }
}

}  // namespace

json yaml_to_json(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Scalar:
      return scalar_to_json(node);
    case YAML::NodeType::Sequence: {
      json arr = json::array();
      for (const auto& x : node) arr.push_back(yaml_to_json(x));
      return arr;
    }
    case YAML::NodeType::Map: {
      json obj = json::object();
      for (const auto& kv : node) obj[kv.first.Scalar()] = yaml_to_json(kv.second);
      return obj;
    }
    default:
      return nullptr;
  }
}

AccreditableHamiltonian parse_hamiltonian(const YAML::Node& node) {
  expect_map(node, "hamiltonian");
  allow_keys(node, {"lattice", "graph", "couplings", "onsite"});
  const auto graph = parse_graph_node(node);
  const auto couplings_node = require(node, "couplings");
  CouplingTable couplings = parse_couplings(couplings_node, graph);
  if (const auto onsite = node["onsite"]) {
    couplings.onsite = as_double(onsite, "onsite");
    return located(couplings_node, [&] { return build_xy_model(graph, couplings); });
  }
  return located(couplings_node, [&] { return build_accreditable(graph, couplings); });
}

ErrorChannel parse_channel(const YAML::Node& node, std::size_t n, const AccreditableHamiltonian* h,
                           double t) {
  expect_map(node, "channel");
  const auto kind = as_string(require(node, "kind"), "kind");
  const auto qubits = [&] { return as_qubits(require(node, "qubits"), n); };
  const auto prob = [&](const char* key) {
    const auto v = require(node, key);
    const double p = as_double(v, key);
    if (!(p >= 0.0 && p <= 1.0)) invalid(v, std::string(key) + " must lie in [0, 1]");
    return p;
  };

  if (kind == "bit_flip" || kind == "phase_flip") {
    allow_keys(node, {"attach", "kind", "qubits", "p"});
    const double p = prob("p");
    const auto q = qubits();
    return kind == "bit_flip" ? ErrorChannel::bit_flip(p, q) : ErrorChannel::phase_flip(p, q);
  }
  if (kind == "depolarizing") {
    allow_keys(node, {"attach", "kind", "qubits", "p"});
    const double p = prob("p");
    std::vector<std::size_t> q;
    if (node["qubits"]) q = qubits();
    return ErrorChannel::depolarizing(p, q, n);
  }
  if (kind == "amplitude_damping") {
    allow_keys(node, {"attach", "kind", "qubits", "gamma"});
    const double gamma = prob("gamma");
    return ErrorChannel::amplitude_damping(gamma, qubits());
  }
  if (kind == "pauli_mixture") {
    allow_keys(node, {"attach", "kind", "qubits", "probabilities"});
    const auto q = qubits();
    const auto probs = parse_probabilities(require(node, "probabilities"));
    return located(node, [&] { return ErrorChannel::pauli_mixture(probs, q); });
  }
  if (kind == "unitary") {
    allow_keys(node, {"attach", "kind", "qubits", "gate"});
    const auto q = qubits();
    if (q.size() != 1) invalid(node, "unitary channels act on exactly one qubit");
    const Gate g = parse_gate(require(node, "gate"), q[0]);
    return ErrorChannel::unitary(g.unitary(), q, "unitary_" + g.label());
  }
  if (kind == "kraus") {
    allow_keys(node, {"attach", "kind", "qubits", "kraus"});
    const auto q = qubits();
    const auto list = require(node, "kraus");
    if (!list.IsSequence()) fail(list, "kraus must be a list of matrices");
    std::vector<Matrix> ops;
    for (const auto& m : list) ops.push_back(parse_complex_matrix(m));
    return located(node, [&] { return ErrorChannel("kraus", std::move(ops), q); });
  }
  if (kind == "hamiltonian_replacement") {
    allow_keys(node, {"attach", "kind", "couplings"});
    if (h == nullptr) invalid(node, "hamiltonian_replacement needs a configured Hamiltonian");
    const auto c = parse_couplings(require(node, "couplings"), h->graph());
    const auto h_prime = located(node, [&] { return build_accreditable(h->graph(), c); });
    return hamiltonian_replacement(h->sum(), h_prime.sum(), t);
  }
  fail(node["kind"], "unknown channel kind '" + kind + "'");
}

LoadedConfig parse_config(std::string_view text) {
  const YAML::Node doc = load_yaml(text);
  if (!doc.IsMap()) fail(doc, "configuration must be a mapping");
  allow_keys(doc, {"hamiltonian", "target", "protocol", "error", "seed"});

  LoadedConfig out;
  out.echo = yaml_to_json(doc);
  ProtocolConfig& cfg = out.protocol;
  cfg.hamiltonian = parse_hamiltonian(require(doc, "hamiltonian"));
  const std::size_t n = cfg.hamiltonian.qubit_count();

  const auto target = require(doc, "target");
  expect_map(target, "target");
  allow_keys(target, {"t", "a_prime", "d_prime"});
  const auto t_node = require(target, "t");
  const double t = as_double(t_node, "t");
  if (!std::isfinite(t)) invalid(t_node, "t must be finite");
  cfg.target.t = t;
  cfg.target.hamiltonian = cfg.hamiltonian.sum();
  cfg.target.a_prime = parse_layer(target["a_prime"], n, "a_prime");
  cfg.target.d_prime = parse_layer(target["d_prime"], n, "d_prime");

  if (const auto protocol = doc["protocol"]) {
    expect_map(protocol, "protocol");
    allow_keys(protocol, {"theta", "alpha"});
    if (protocol["theta"]) cfg.theta = as_double(protocol["theta"], "theta");
    if (protocol["alpha"]) cfg.alpha = as_double(protocol["alpha"], "alpha");
    located(protocol, [&] { return compute_n_traps(cfg.theta, cfg.alpha); });
  }

  if (const auto error = doc["error"]) {
    expect_map(error, "error");
    allow_keys(error, {"mode", "channels"});
    const auto mode = error["mode"] ? parse_mode(error["mode"]) : ComplianceMode::model_compliant;
    cfg.error = ErrorConfig(mode);
    if (const auto channels = error["channels"]) {
      if (!channels.IsSequence()) fail(channels, "channels must be a list");
      for (const auto& ch : channels) {
        expect_map(ch, "channel");
        const auto attach_node = require(ch, "attach");
        const auto point = parse_attach_point(as_string(attach_node, "attach"));
        if (!point) fail(attach_node, "unknown attach point '" + attach_node.Scalar() + "'");
        if (as_string(require(ch, "kind"), "kind") == "hamiltonian_replacement" &&
            mode != ComplianceMode::unconstrained) {
          invalid(ch, "hamiltonian_replacement is only allowed in unconstrained mode");
        }
        cfg.error.attach(*point, parse_channel(ch, n, &cfg.hamiltonian, t));
      }
    }
  }

  if (const auto seed = doc["seed"]) {
    if (!seed.IsScalar()) fail(seed, "seed must be an unsigned integer");
    try {
      cfg.seed = seed.as<std::uint64_t>();
    } catch (const YAML::BadConversion&) {
      fail(seed, "seed must be an unsigned integer, got '" + seed.Scalar() + "'");
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedConfig load_config(const std::filesystem::path& path) { return parse_config(read_file(path)); }

AccreditableHamiltonian load_hamiltonian_fixture(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  const auto text = read_file(path);
  if (ext == ".paulis") return hamiltonian_from_sum(parse_pauli_sum(text));
  if (ext == ".graph") {
    const auto g = parse_graph(text);
    return build_accreditable(g, CouplingTable::uniform(g, 1.0));
  }
  const YAML::Node doc = load_yaml(text);
  if (!doc.IsMap()) fail(doc, "fixture must be a mapping");
  return parse_hamiltonian(doc["hamiltonian"] ? doc["hamiltonian"] : doc);
}

std::vector<double> parse_distribution(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::vector<double> out;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = raw.substr(0, hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    const auto column = line.find_first_not_of(" \t") + 1;
    if (tokens.size() > 2) throw ParseError("expected '[bits] probability'", line_no, column);
    if (tokens.size() == 2) {
      std::uint64_t index = 0;
      try {
        index = parse_bitstring(tokens[0]);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad bitstring '" + tokens[0] + "'", line_no, column);
      }
      if (index != out.size()) throw ParseError("outcomes must be listed in order", line_no, column);
    }
    try {
      std::size_t used = 0;
      const double p = std::stod(tokens.back(), &used);
      if (used != tokens.back().size()) throw std::invalid_argument("trailing");
      out.push_back(p);
    } catch (const std::exception&) {
      throw ParseError("bad probability '" + tokens.back() + "'", line_no, column);
    }
  }
  if (out.empty() || (out.size() & (out.size() - 1)) != 0) {
    throw ValidationError("distribution length must be a power of two");
  }
  double sum = 0.0;
  for (double p : out) {
    if (p < -1e-12) throw ValidationError("negative probability in distribution");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("distribution does not sum to 1");
  return out;
}

std::vector<double> load_distribution(const std::filesystem::path& path) {
  return parse_distribution(read_file(path));
}

}  // namespace hqsa::cli
