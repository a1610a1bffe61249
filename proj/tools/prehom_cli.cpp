#include "prehom/action.hpp"
#include "prehom/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace prehom;

namespace {

enum class Format { text, json, latex };

struct Config {
  std::uint64_t seed = 0;
  Format format = Format::text;
  std::string output;
};

// Exit codes.
constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

// Name of the step in progress, reported with errors.
std::string g_stage = "arguments";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  std::string body;
  int code = kPositive;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_not_latex(const Config& cfg) {
  if (cfg.format == Format::latex) throw UsageError("latex output is only available for 'rep matrix'");
}

struct LoadedAlgebra {
  std::string name;
  std::optional<QuotientAlgebra> quotient;
  FiniteAlgebra algebra;
};

// A table index, a presentation, or a file holding a presentation or algebra JSON.
LoadedAlgebra load_algebra(const std::string& arg) {
  if (all_digits(arg)) {
    g_stage = "table";
    const TableEntry& e = table_entry(std::stoi(arg));
    g_stage = "groebner";
    QuotientAlgebra q = quotient_algebra(e.presentation);
    FiniteAlgebra a = q.algebra;
    return {"entry " + arg, std::move(q), std::move(a)};
  }
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    g_stage = "read";
    text = trim(read_file(arg));
    if (!text.empty() && text.front() == '{') {
      g_stage = "json";
      FiniteAlgebra a = algebra_from_json(Json::parse(text));
      g_stage = "axioms";
      AxiomReport report = verify_axioms(a);
      for (const auto& c : report.checks)
        if (!c.ok) throw AxiomViolation(c.law + " fails: " + c.detail);
      return {arg, std::nullopt, std::move(a)};
    }
  }
  g_stage = "parse";
  Presentation p = parse_presentation(text);
  g_stage = "groebner";
  QuotientAlgebra q = quotient_algebra(p);
  FiniteAlgebra a = q.algebra;
  return {format_presentation(p), std::move(q), std::move(a)};
}

std::string basis_text(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i];
  return out;
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json orbit_json(const std::optional<std::uint64_t>& c) { return c ? Json(*c) : Json("infinite"); }
std::string orbit_text(const std::optional<std::uint64_t>& c) { return c ? std::to_string(*c) : "infinite"; }

Json fingerprint_json(const Fingerprint& f) {
  Json j;
  j["dim"] = f.dim;
  j["hilbert"] = f.hilbert;
  j["socle_dim"] = f.socle_dim;
  j["ann_filtration"] = f.ann_filtration;
  j["embedding_dim"] = f.embedding_dim;
  return j;
}

std::string fingerprint_text(const Fingerprint& f) {
  return "hilbert " + format_sequence(f.hilbert) + ", socle " + std::to_string(f.socle_dim) + ", ann " +
         format_sequence(f.ann_filtration) + ", embedding dim " + std::to_string(f.embedding_dim);
}

// Columns padded to the widest entry.
std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], row[j].size());
    }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += "  ";
      line += row[j] + std::string(width[j] - row[j].size(), ' ');
    }
    out += trim(line) + "\n";
  }
  return out;
}

// ---- table ----

Result table_list(const Config& cfg) {
  require_not_latex(cfg);
  const auto& table = load_table();
  if (cfg.format == Format::json) {
    Json rows = Json::array();
    for (const auto& e : table)
      rows.push_back({{"index", e.index}, {"dim", e.declared_dim}, {"presentation", e.source}});
    return {dump(rows)};
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& e : table) cells.push_back({std::to_string(e.index), std::to_string(e.declared_dim), e.source});
  return {grid(cells)};
}

Result table_show(const Config& cfg, int k) {
  require_not_latex(cfg);
  g_stage = "table";
  const TableEntry& e = table_entry(k);
  g_stage = "groebner";
  QuotientAlgebra q = quotient_algebra(e.presentation);
  const FiniteAlgebra& a = q.algebra;
  g_stage = "invariants";
  Fingerprint f = fingerprint(a);
  bool chain = is_chain(a);
  bool square_zero = is_square_zero_radical(a, cfg.seed);
  auto orbits = orbit_count(a, cfg.seed);
  if (cfg.format == Format::json) {
    Json j;
    j["index"] = e.index;
    j["presentation"] = e.source;
    j["declared_dim"] = e.declared_dim;
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    j["hilbert"] = f.hilbert;
    j["socle_dim"] = f.socle_dim;
    j["embedding_dim"] = f.embedding_dim;
    j["chain"] = chain;
    j["square_zero_radical"] = square_zero;
    j["orbits"] = orbit_json(orbits);
    return {dump(j)};
  }
  std::string out = "entry " + std::to_string(e.index) + "\n";
  out += "presentation: " + e.source + "\n";
  out += "dim: " + std::to_string(a.dim());
  if (static_cast<int>(a.dim()) != e.declared_dim) out += " (table lists " + std::to_string(e.declared_dim) + ")";
  out += "\n";
  out += "basis: " + basis_text(a.labels()) + "\n";
  out += "hilbert: " + format_sequence(f.hilbert) + "\n";
  out += "socle: " + std::to_string(f.socle_dim) + "\n";
  out += "embedding dim: " + std::to_string(f.embedding_dim) + "\n";
  out += "chain: " + yes_no(chain) + "\n";
  out += "square-zero radical: " + yes_no(square_zero) + "\n";
  out += "orbits: " + orbit_text(orbits) + "\n";
  return {out};
}

Result table_sweep(const Config& cfg) {
  require_not_latex(cfg);
  g_stage = "invariants";
  std::vector<Fingerprint> prints;
  for (const auto& e : load_table()) prints.push_back(fingerprint(from_quotient(e.presentation)));
  Json pairs = Json::array();
  std::string text;
  std::size_t separated = 0, inconclusive = 0;
  for (std::size_t i = 0; i < prints.size(); ++i)
    for (std::size_t j = i + 1; j < prints.size(); ++j) {
      auto sep = certify_nonisomorphic(prints[i], prints[j]);
      Json p = {{"left", i + 1}, {"right", j + 1}};
      std::string line = std::to_string(i + 1) + " " + std::to_string(j + 1) + " ";
      if (sep) {
        ++separated;
        p["invariant"] = sep->invariant;
        p["values"] = {sep->left, sep->right};
        line += sep->invariant + " " + sep->left + " " + sep->right;
      } else {
        ++inconclusive;
        p["invariant"] = nullptr;
        line += "inconclusive";
      }
      pairs.push_back(std::move(p));
      text += line + "\n";
    }
  if (cfg.format == Format::json)
    return {dump({{"pairs", pairs}, {"separated", separated}, {"inconclusive", inconclusive}})};
  text += "separated: " + std::to_string(separated) + ", inconclusive: " + std::to_string(inconclusive) + "\n";
  return {text};
}

// ---- algebra ----

Result algebra_info(const Config& cfg, const std::string& arg) {
  require_not_latex(cfg);
  LoadedAlgebra loaded = load_algebra(arg);
  const FiniteAlgebra& a = loaded.algebra;
  g_stage = "axioms";
  AxiomReport axioms = verify_axioms(a);
  for (const auto& c : axioms.checks)
    if (!c.ok) throw AxiomViolation(c.law + " fails: " + c.detail);
  g_stage = "decomposition";
  bool local = is_geometrically_local(a);
  LocalDecomposition dec = local_decomposition(a, cfg.seed);
  auto orbits = orbit_count(a, cfg.seed);
  auto forms = unit_hyperplanes(a, cfg.seed);
  g_stage = "invariants";

  Json summands = Json::array();
  std::string summary;
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    const auto& s = dec.summands[i];
    Fingerprint f = fingerprint(s);
    bool chain = is_chain(s);
    summands.push_back({{"dim", s.dim()},
                        {"idempotent", vector_json(dec.idempotents[i])},
                        {"chain", chain},
                        {"fingerprint", fingerprint_json(f)}});
    summary += "  summand " + std::to_string(i + 1) + ": dim " + std::to_string(s.dim()) + ", idempotent " +
               vector_text(dec.idempotents[i]) + ", " + (chain ? "chain, " : "") + fingerprint_text(f) + "\n";
  }

  if (cfg.format == Format::json) {
    Json j;
    j["algebra"] = loaded.name;
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    j["local"] = local;
    j["summands"] = std::move(summands);
    if (local) j["fingerprint"] = fingerprint_json(fingerprint(a));
    j["orbits"] = orbit_json(orbits);
    Json hyper = Json::array();
    for (const auto& f : forms) hyper.push_back(vector_json(f));
    j["unit_hyperplanes"] = std::move(hyper);
    return {dump(j)};
  }
  std::string out = "algebra: " + loaded.name + "\n";
  out += "dim: " + std::to_string(a.dim()) + "\n";
  out += "basis: " + basis_text(a.labels()) + "\n";
  out += "local: " + yes_no(local) + "\n";
  out += "summands: " + std::to_string(dec.summands.size()) + "\n" + summary;
  if (local) {
    out += "chain: " + yes_no(is_chain(a)) + "\n";
    out += "fingerprint: " + fingerprint_text(fingerprint(a)) + "\n";
  }
  out += "orbits: " + orbit_text(orbits) + "\n";
  out += "unit hyperplanes:";
  for (const auto& f : forms) out += " " + vector_text(f);
  out += "\n";
  return {out};
}

// ---- rep ----

ParamMatrixRep build_rep(const Config& cfg, const LoadedAlgebra& loaded, const std::string& basis) {
  g_stage = "representation";
  if (basis.empty()) return matrix_rep(loaded.algebra, cfg.seed);
  if (!loaded.quotient) throw UsageError("--basis needs a presentation or table entry");
  g_stage = "basis";
  auto monomials = split(basis, ',');
  FiniteAlgebra rebased = rebase(*loaded.quotient, monomials);
  g_stage = "representation";
  return matrix_rep(rebased, cfg.seed);
}

std::map<std::string, Rational> parse_assignments(const std::string& text) {
  std::map<std::string, Rational> out;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value, got '" + item + "'");
    out[trim(item.substr(0, eq))] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  Integer num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

Result rep_matrix(const Config& cfg, const std::string& arg, const std::string& basis, const std::string& eval) {
  LoadedAlgebra loaded = load_algebra(arg);
  ParamMatrixRep rep = build_rep(cfg, loaded, basis);
  if (!eval.empty()) {
    g_stage = "evaluation";
    Matrix m = evaluate_rep(rep, parse_assignments(eval));
    if (cfg.format == Format::json) return {dump(matrix_json(m))};
    if (cfg.format == Format::latex) {
      std::string out = "\\begin{pmatrix}\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " & " : "") + latex_rational(m(i, j));
        out += i + 1 < m.rows() ? " \\\\\n" : "\n";
      }
      return {out + "\\end{pmatrix}\n"};
    }
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      cells.emplace_back();
      for (std::size_t j = 0; j < m.cols(); ++j) cells.back().push_back(to_string(m(i, j)));
    }
    return {grid(cells)};
  }
  if (cfg.format == Format::json) return {dump(to_json(rep))};
  if (cfg.format == Format::latex) return {to_latex(rep) + "\n"};
  std::string out = "basis: " + basis_text(rep.basis_labels) + "\n";
  out += "torus: " + basis_text(rep.torus_params) + "\n";
  out += "additive: " + (rep.additive_params.empty() ? std::string("none") : basis_text(rep.additive_params)) + "\n";
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < rep.n; ++i) {
    cells.emplace_back();
    for (std::size_t j = 0; j < rep.n; ++j) cells.back().push_back(rep.entries(i, j).to_string());
  }
  return {out + grid(cells)};
}

Result rep_lie(const Config& cfg, const std::string& arg) {
  require_not_latex(cfg);
  LoadedAlgebra loaded = load_algebra(arg);
  ParamMatrixRep rep = build_rep(cfg, loaded, "");
  MatrixGroupInput g{rep.n, lie_basis(rep), std::nullopt};
  auto unit = solve(Matrix::from_columns(rep.basis, rep.n), loaded.algebra.unit());
  g.base_point = *unit;
  if (cfg.format == Format::json) return {dump(to_json(g))};
  std::vector<std::string> names = *rep.variables;
  std::string out = "base point: " + vector_text(*g.base_point) + "\n";
  for (std::size_t p = 0; p < g.lie_basis.size(); ++p) {
    out += "d/d" + names[p] + ":\n";
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < rep.n; ++i) {
      cells.emplace_back();
      for (std::size_t j = 0; j < rep.n; ++j) cells.back().push_back(to_string(g.lie_basis[p](i, j)));
    }
    out += grid(cells);
  }
  return {out};
}

// ---- compare ----

Result compare(const Config& cfg, const std::string& left, const std::string& right) {
  require_not_latex(cfg);
  LoadedAlgebra a = load_algebra(left);
  LoadedAlgebra b = load_algebra(right);
  g_stage = "invariants";
  auto sep = certify_nonisomorphic(a.algebra, b.algebra);
  int code = sep ? kPositive : kNegative;
  if (cfg.format == Format::json) {
    Json j = {{"left", a.name}, {"right", b.name}, {"separated", sep.has_value()}};
    if (sep) j["separation"] = {{"invariant", sep->invariant}, {"left", sep->left}, {"right", sep->right}};
    return {dump(j), code};
  }
  if (!sep) return {"inconclusive: fingerprints agree\n", code};
  return {"separated by " + sep->invariant + ": " + sep->left + " vs " + sep->right + "\n", code};
}

// ---- reconstruct ----

std::string algebra_table_text(const FiniteAlgebra& a) {
  std::string out = "dim: " + std::to_string(a.dim()) + "\n";
  out += "basis: " + basis_text(a.labels()) + "\n";
  out += "unit: " + vector_text(a.unit()) + "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      Vector prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
      if (is_zero(prod)) continue;
      out += a.labels()[i] + "*" + a.labels()[j] + " = " + vector_text(prod) + "\n";
    }
  return out;
}

Result reconstruct(const Config& cfg, const std::string& file, const std::string& vector) {
  require_not_latex(cfg);
  g_stage = "read";
  std::string text = read_file(file);
  g_stage = "json";
  MatrixGroupInput g = group_from_json(Json::parse(text));
  g_stage = "arguments";
  Vector v;
  if (!vector.empty()) {
    for (const auto& x : split(vector, ',')) v.push_back(parse_rational(x));
  } else if (g.base_point) {
    v = *g.base_point;
  } else {
    throw UsageError("no --vector given and the input has no base_point");
  }
  if (v.size() != g.n) throw UsageError("vector has length " + std::to_string(v.size()) + ", expected " +
                                        std::to_string(g.n));
  g_stage = "commutativity";
  if (!check_commutative(g)) {
    std::string msg = "group is not commutative";
    if (cfg.format == Format::json) return {dump({{"reconstructed", false}, {"reason", msg}}), kNegative};
    return {msg + "\n", kNegative};
  }
  g_stage = "reconstruction";
  try {
    ReconstructedAlgebra rec = reconstruct_algebra(g, v);
    bool ok = verify_axioms(rec.algebra).ok();
    if (cfg.format == Format::json)
      return {dump({{"reconstructed", true}, {"axioms_ok", ok}, {"algebra", to_json(rec.algebra)}}),
              ok ? kPositive : kNegative};
    return {algebra_table_text(rec.algebra) + "axioms: " + (ok ? "ok" : "violated") + "\n",
            ok ? kPositive : kNegative};
  } catch (const Error& e) {
    if (!dynamic_cast<const NotCyclic*>(&e) && !dynamic_cast<const NonCommutativeCommutant*>(&e) &&
        !dynamic_cast<const DimensionMismatch*>(&e))
      throw;
    if (cfg.format == Format::json) return {dump({{"reconstructed", false}, {"reason", e.what()}}), kNegative};
    return {std::string("not reconstructed: ") + e.what() + "\n", kNegative};
  }
}

// ---- action ----

Result action_check(const Config& cfg, const std::string& name, const std::vector<std::string>& params,
                    const std::string& file, bool require_fixed_point) {
  require_not_latex(cfg);
  g_stage = "action";
  PolynomialAction act = [&] {
    if (!file.empty()) {
      if (!name.empty()) throw UsageError("give either an action name or --file, not both");
      return action_from_json(Json::parse(read_file(file)));
    }
    if (name.empty()) throw UsageError("an action name or --file is required");
    std::map<std::string, long> values;
    for (const auto& p : params)
      for (const auto& item : split(p, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("expected name=value, got '" + item + "'");
        values[trim(item.substr(0, eq))] = std::stol(item.substr(eq + 1));
      }
    return builtin(name, values);
  }();
  g_stage = "analysis";
  ActionReport r = analyze(act, cfg.seed);
  int code = kPositive;
  if (!r.axioms_ok || (require_fixed_point && r.fixed_point != FixedPoint::yes)) code = kNegative;
  if (cfg.format == Format::json) {
    Json j = to_json(act);
    j["name"] = act.name;
    j["axioms_ok"] = r.axioms_ok;
    j["linear"] = r.linear;
    j["has_fixed_point"] = to_string(r.fixed_point);
    j["orbit_rank_at_witness"] = r.orbit_rank_at_witness;
    j["witness"] = vector_json(r.witness);
    return {dump(j), code};
  }
  std::string out = "action: " + act.name + " (r=" + std::to_string(act.r) + ", s=" + std::to_string(act.s) +
                    ", n=" + std::to_string(act.n) + ")\n";
  for (std::size_t i = 0; i < act.n; ++i)
    out += "  x" + std::to_string(i + 1) + " -> " + act.components[i].to_string() + "\n";
  out += "axioms: " + std::string(r.axioms_ok ? "ok" : "violated") + "\n";
  out += "linear: " + yes_no(r.linear) + "\n";
  out += "fixed point: " + to_string(r.fixed_point) + "\n";
  out += "orbit rank: " + std::to_string(r.orbit_rank_at_witness) + " at " + vector_text(r.witness) + "\n";
  return {out, code};
}

int emit(const Config& cfg, const Result& r) {
  if (cfg.output.empty()) {
    std::cout << r.body;
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "error (output): cannot write '" << cfg.output << "'\n";
      return kError;
    }
    out << r.body;
  }
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutative algebras, their unit groups and matrix group actions"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string format = "text";
  app.add_option("--seed", cfg.seed, "Seed for generic choices")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--output", cfg.output, "Write output to this file");

  std::function<Result()> run;

  auto* table = app.add_subcommand("table", "Browse the table of local algebras");
  table->require_subcommand(1);
  table->add_subcommand("list", "All entries")->callback([&] { run = [&] { return table_list(cfg); }; });
  int index = 0;
  auto* show = table->add_subcommand("show", "One entry with its invariants");
  show->add_option("k", index, "Entry number")->required();
  show->callback([&] { run = [&] { return table_show(cfg, index); }; });
  table->add_subcommand("sweep", "Compare every pair of entries")->callback([&] {
    run = [&] { return table_sweep(cfg); };
  });

  std::string alg_arg;
  auto* algebra = app.add_subcommand("algebra", "Analyse an algebra");
  algebra->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "Dimension, decomposition and invariants");
  info->add_option("algebra", alg_arg, "Presentation, table entry or file")->required();
  info->callback([&] { run = [&] { return algebra_info(cfg, alg_arg); }; });

  std::string basis, eval;
  auto* rep = app.add_subcommand("rep", "Matrix form of the unit group action");
  rep->require_subcommand(1);
  auto* matrix = rep->add_subcommand("matrix", "Parametrized matrix");
  matrix->add_option("algebra", alg_arg, "Presentation, table entry or file")->required();
  matrix->add_option("--basis", basis, "Comma-separated monomial basis");
  matrix->add_option("--eval", eval, "Comma-separated parameter values, e.g. l1=2,a1=3");
  matrix->callback([&] { run = [&] { return rep_matrix(cfg, alg_arg, basis, eval); }; });
  auto* lie = rep->add_subcommand("lie", "Lie algebra as group input");
  lie->add_option("algebra", alg_arg, "Presentation, table entry or file")->required();
  lie->callback([&] { run = [&] { return rep_lie(cfg, alg_arg); }; });

  std::string left, right;
  auto* cmp = app.add_subcommand("compare", "Try to certify two local algebras non-isomorphic");
  cmp->add_option("a", left)->required();
  cmp->add_option("b", right)->required();
  cmp->callback([&] { run = [&] { return compare(cfg, left, right); }; });

  std::string matrices, vector;
  auto* rec = app.add_subcommand("reconstruct", "Recover the algebra from a matrix group");
  rec->add_option("--matrices", matrices, "Group or representation JSON")->required();
  rec->add_option("--vector", vector, "Comma-separated base vector");
  rec->callback([&] { run = [&] { return reconstruct(cfg, matrices, vector); }; });

  std::string action_name, action_file;
  std::vector<std::string> action_params;
  bool require_fixed = false;
  auto* action = app.add_subcommand("action", "Polynomial group actions");
  action->require_subcommand(1);
  auto* check = action->add_subcommand("check", "Axioms, linearity, fixed points and orbit rank");
  check->add_option("name", action_name, "translations, hirzebruch, polex, scalar or table_rep");
  check->add_option("--param", action_params, "name=value, repeatable");
  check->add_option("--file", action_file, "Action JSON");
  check->add_flag("--require-fixed-point", require_fixed, "Exit 1 unless a fixed point is found");
  check->callback([&] { run = [&] { return action_check(cfg, action_name, action_params, action_file, require_fixed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPositive : kError;
  }
  cfg.format = format == "json" ? Format::json : format == "latex" ? Format::latex : Format::text;

  try {
    return emit(cfg, run());
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error (" << g_stage << "): " << e.what() << "\n";
  }
  return kError;
}
