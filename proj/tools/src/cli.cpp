#include "invforms_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "invforms/classify.hpp"
#include "invforms/error.hpp"
#include "invforms/killing.hpp"
#include "invforms/rootsys.hpp"
#include "invforms/sympforms.hpp"
#include "invforms/tensoralg.hpp"

namespace invforms::cli {

namespace {

using json = nlohmann::json;

enum class Format { json, md, plain };

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

// Markdown and plain renderings of a flat object; nested arrays of objects
// become their own table / block.
void render_md(const json& j, std::ostream& out) {
  out << "| key | value |\n|---|---|\n";
  std::vector<std::string> tables;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
      tables.push_back(it.key());
      continue;
    }
    out << "| " << it.key() << " | " << scalar_text(it.value()) << " |\n";
  }
  for (const auto& key : tables) {
    const json& rows = j.at(key);
    out << "\n### " << key << "\n\n|";
    std::vector<std::string> cols;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) cols.push_back(it.key());
    for (const auto& c : cols) out << ' ' << c << " |";
    out << "\n|";
    for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& row : rows) {
      out << '|';
      for (const auto& c : cols) out << ' ' << (row.contains(c) ? scalar_text(row.at(c)) : "") << " |";
      out << '\n';
    }
  }
}

void render_plain(const json& j, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
      out << it.key() << ":\n";
      for (const auto& row : it.value()) {
        out << " ";
        for (auto c = row.begin(); c != row.end(); ++c) out << ' ' << c.key() << '=' << scalar_text(c.value());
        out << '\n';
      }
    } else {
      out << it.key() << ": " << scalar_text(it.value()) << '\n';
    }
  }
}

void emit(const json& j, Format f, std::ostream& out) {
  switch (f) {
    case Format::json: out << j.dump(2) << '\n'; break;
    case Format::md: render_md(j, out); break;
    case Format::plain: render_plain(j, out); break;
  }
}

json tri(const std::optional<bool>& b) { return b ? json(*b) : json("unknown"); }

std::string type_letter(CartanType t) { return std::string(1, static_cast<char>(t)); }

int env_max_rank() {
  const char* v = std::getenv("FORMS_MAX_RANK");
  if (!v || !*v) return -1;
  try {
    std::size_t pos = 0;
    const int k = std::stoi(v, &pos);
    if (pos != std::string(v).size() || k <= 0) throw std::invalid_argument("bad");
    return k;
  } catch (const std::exception&) {
    throw InvalidInput(std::string("FORMS_MAX_RANK must be a positive integer, got '") + v + "'");
  }
}

std::vector<std::int64_t> read_int_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " must be an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

classify::FiltrationTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open table file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput("table file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("lambda") || !j.contains("entries") || !j.at("entries").is_array())
    throw InvalidInput("table file must have 'lambda' and 'entries' keys");
  classify::FiltrationTable t;
  t.lambda = Weight(read_int_array(j.at("lambda"), "lambda"));
  for (const auto& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("mu") || !e.contains("mult") || !e.at("mult").is_number_integer())
      throw InvalidInput("each table entry needs 'mu' and an integer 'mult'");
    Weight mu(read_int_array(e.at("mu"), "mu"));
    if (!t.entries.emplace(mu, e.at("mult").get<std::int64_t>()).second)
      throw InvalidInput("duplicate entry for mu = " + to_string(mu));
  }
  return t;
}

// --- subcommands -----------------------------------------------------------

struct ClassifyArgs {
  std::string datum, weight, kind = "weyl", table, dual_table;
  std::uint32_t p = 0;
};

int do_classify(const ClassifyArgs& a, Format f, std::ostream& out) {
  const ProductDatum datum = ProductDatum::parse(a.datum);
  const auto kind = classify::parse_module_kind(a.kind);
  std::optional<classify::FiltrationTable> t, td;
  if (!a.table.empty()) t = load_table(a.table);
  if (!a.dual_table.empty()) td = load_table(a.dual_table);
  std::string weight_text = a.weight;
  if (weight_text.empty()) {
    if (!t) throw InvalidInput("--weight is required");
    weight_text = to_string(t->lambda);
  }
  const ProductWeight lambda = datum.parse_weight(weight_text);
  const auto v = classify::classify(datum, lambda, a.p, kind, t ? &*t : nullptr, td ? &*td : nullptr);

  json j;
  j["datum"] = datum.label();
  j["weight"] = to_string(lambda);
  j["char"] = a.p;
  j["kind"] = classify::to_string(kind);
  j["bilinear_dim"] = v.bilinear_dim ? json(*v.bilinear_dim) : json("unknown");
  j["symplectic"] = tri(v.symplectic);
  j["orthogonal"] = tri(v.orthogonal);
  j["certificate"] = v.certificate;
  j["decided"] = v.decided();
  j["self_dual"] = is_self_dual(datum, lambda);
  if (v.h1_wedge2) j["h1_wedge2"] = *v.h1_wedge2;
  if (kind == classify::ModuleKind::tilting) {
    const auto& rs = datum.factors()[0];
    const auto d = classify::tilting_bilinear_dim(rs, *t, td ? *td : *t);
    j["lambda_term"] = d.lambda_term;
  }
  if (a.p == 2 && !lambda.is_zero() && (kind == classify::ModuleKind::weyl || kind == classify::ModuleKind::irreducible)) {
    const auto branch = classify::weyl_orthogonal_char2(datum, lambda);
    j["trichotomy"] = classify::to_string(branch);
    if (branch == classify::Char2Branch::orthogonal) {
      j["radical_case"] = classify::to_string(classify::weyl_quadratic_radical_case(datum, lambda));
      const auto nz = std::count_if(lambda.components.begin(), lambda.components.end(),
                                    [](const Weight& w) { return !w.is_zero(); });
      if (nz == 1) {
        for (std::size_t i = 0; i < lambda.components.size(); ++i)
          if (!lambda.components[i].is_zero()) {
            const auto c = classify::ncrit_chain(datum.factors()[i], lambda.components[i]);
            j["ncrit"] = {{"not_sum_pos_roots", c.not_sum_pos_roots},
                          {"not_in_W2_orbit", c.not_in_W2_orbit},
                          {"implied_orthogonal", c.implied_orthogonal}};
          }
      }
    }
  }
  emit(j, f, out);
  return v.decided() ? kExitOk : kExitUnknown;
}

int do_adjoint_table(int max_rank, Format f, std::ostream& out) {
  const int cap = env_max_rank();
  if (cap > 0) max_rank = std::min(max_rank, cap);
  const auto rows = killing::adjoint_table(max_rank);
  json jr = json::array();
  for (const auto& r : rows)
    jr.push_back({{"type", type_letter(r.type)},
                  {"rank", r.rank},
                  {"label", type_letter(r.type) + std::to_string(r.rank)},
                  {"orthogonal", r.orthogonal},
                  {"radical_dim", r.radical_dim},
                  {"h1_annotation", r.h1_annotation ? json(*r.h1_annotation) : json(nullptr)}});
  json j;
  j["max_rank"] = max_rank;
  j["char"] = 2;
  j["rows"] = jr;
  j["certificate"] =
      "L(highest root) is orthogonal iff the toral reduced Killing form vanishes on ker(DC mod 2)";
  j["h1_source"] = "static annotation from the published adjoint module structure; not computed";
  if (f == Format::md) {
    out << "| type | rank | L(highest root) orthogonal? | dim ker(DC mod 2) | dim H^1 (annotation) |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& r : rows)
      out << "| " << type_letter(r.type) << " | " << r.rank << " | " << (r.orthogonal ? "yes" : "no") << " | "
          << r.radical_dim << " | " << (r.h1_annotation ? std::to_string(*r.h1_annotation) : "-") << " |\n";
    out << "\n" << j["certificate"].get<std::string>() << ". H^1 column: " << j["h1_source"].get<std::string>()
        << ".\n";
    return kExitOk;
  }
  emit(j, f, out);
  return kExitOk;
}

std::string bit_row(const gf::PrimeMatrix& m, std::size_t i) {
  std::string s(m.cols(), '0');
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.at(i, c)) s[c] = '1';
  return s;
}

int do_sympform(int n, int r, int max_n, Format f, std::ostream& out) {
  const symp::SymplecticSpace sp(n, max_n);
  if (r < 1 || r > sp.dim()) throw InvalidInput("r must satisfy 1 <= r <= 2n");
  const auto basis = symp::wedge_basis(sp.dim(), r);
  const auto b = symp::wedge_bilinear(sp, r);
  const auto q = (r % 2) ? symp::wedge_quadratic(sp, r) : symp::even_wedge_form(sp, r);

  json j;
  j["n"] = n;
  j["r"] = r;
  j["dim"] = basis.size();
  json names = json::array();
  for (const auto& s : basis) names.push_back(symp::symbol_name(sp, s));
  j["basis"] = names;
  json gram = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) gram.push_back(bit_row(b.gram(), i));
  j["gram"] = gram;
  j["gram_rank"] = gf::rank(b.gram());
  json coeffs = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = i; k < basis.size(); ++k)
      if (q.coeff(i, k)) coeffs.push_back({i, k});
  j["quadratic_form"] = (r % 2) ? "q_(r): half the integral diagonal, reduced mod 2" : "x -> b_(r)(x, x)";
  j["quadratic_coefficients"] = coeffs;

  std::vector<gf::PrimeMatrix> induced;
  for (const auto& g : symp::sp_generators(sp)) induced.push_back(symp::induced_action(g, r));
  if (r <= n) {
    const auto w = symp::generator_submodule(sp, r);
    std::size_t expected = basis.size();
    if (r >= 2) expected -= symp::wedge_basis(sp.dim(), r - 2).size();
    j["submodule_dim"] = w.dim();
    j["submodule_expected_dim"] = expected;
    j["invariant_on_submodule"] = symp::verify_invariance(q, induced, w);
  } else {
    j["submodule_dim"] = nullptr;
    j["submodule_expected_dim"] = nullptr;
    j["invariant_on_submodule"] = nullptr;
  }
  const gf::Subspace full(2, basis.size(), [&] {
    std::vector<gf::Vec> e;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      gf::Vec v(basis.size(), 0);
      v[i] = 1;
      e.push_back(std::move(v));
    }
    return e;
  }());
  j["invariant_on_full_space"] = symp::verify_invariance(q, induced, full);
  j["certificate"] = "invariance under root-subgroup generators of Sp(2n, F2) implies invariance under the group";
  emit(j, f, out);
  return kExitOk;
}

int do_tensor_dims(int d, std::uint32_t p, Format f, std::ostream& out) {
  const auto dims = tensor::symmetric_power_dims(d, p);
  json j;
  j["dim"] = d;
  j["p"] = p;
  j["sym_power"] = dims.sym_power;
  j["symmetrized"] = dims.symmetrized;
  j["kernel"] = dims.kernel;
  j["symmetric_tensors"] = dims.symmetric_tensors;
  j["certificate"] = "kernel of the multilinearization S^p -> tensor^p is spanned by the p-th powers";
  emit(j, f, out);
  return kExitOk;
}

int do_affine_orbit(const std::string& datum_text, const std::string& weight_text, std::int64_t p, Format f,
                    std::ostream& out) {
  const RootSystem rs = RootSystem::parse(datum_text);
  const Weight lambda = parse_weight(weight_text);
  rs.check_weight(lambda);
  if (p <= 0 || !gf::is_prime(static_cast<std::uint64_t>(p))) throw InvalidInput("p must be prime");
  json j;
  j["datum"] = rs.label();
  j["weight"] = to_string(lambda);
  j["p"] = p;
  j["in_orbit_of_zero"] = in_affine_orbit_of_zero(rs, lambda, p);
  j["alcove_representative"] = to_string(alcove_representative(rs, lambda, p));
  j["zero_representative"] = to_string(alcove_representative(rs, Weight::zero(rs.rank()), p));
  j["certificate"] = "dot-action orbits of W x pZ(roots) meet the closed bottom alcove in one point";
  emit(j, f, out);
  return kExitOk;
}

void emit_error(const std::string& type, const std::string& message, std::ostream& out) {
  json j;
  j["error"] = {{"type", type}, {"message", message}};
  out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"invforms command line"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md", "plain"}));

  ClassifyArgs ca;
  auto* cls = app.add_subcommand("classify", "Decide invariant forms on a module");
  cls->add_option("--datum", ca.datum, "Root datum, e.g. C3 or A1xC3+T2")->required();
  cls->add_option("--weight", ca.weight, "Dominant weight, comma separated (torus coordinates last)");
  cls->add_option("--char", ca.p, "Characteristic: 0 or a prime");
  cls->add_option("--kind", ca.kind, "irreducible | weyl | induced | tilting");
  cls->add_option("--table", ca.table, "Good-filtration table JSON for tilting modules");
  cls->add_option("--dual-table", ca.dual_table, "Table for -w0 lambda when lambda is not self-dual");

  int max_rank = 12;
  auto* adj = app.add_subcommand("adjoint-table", "Orthogonality of L(highest root) in characteristic 2");
  adj->add_option("--max-rank", max_rank, "Largest classical rank (>= 8)");

  int sn = 0, sr = 0, smax = symp::kDefaultMaxN;
  auto* sym = app.add_subcommand("sympform", "Forms on exterior powers of a symplectic space over F2");
  sym->add_option("--n", sn, "Half dimension")->required();
  sym->add_option("--r", sr, "Exterior degree")->required();
  sym->add_option("--max-n", smax, "Override the size cap on n");

  int td = 0;
  std::uint32_t tp = 0;
  auto* ten = app.add_subcommand("tensor-dims", "Dimensions around S^p -> symmetric tensors");
  ten->add_option("--dim", td, "Dimension of V")->required();
  ten->add_option("--p", tp, "Prime characteristic")->required();

  std::string od, ow;
  std::int64_t op = 2;
  auto* orb = app.add_subcommand("affine-orbit", "Membership in the dot orbit W_p . 0");
  orb->add_option("--datum", od, "Simple type, e.g. A2")->required();
  orb->add_option("--weight", ow, "Weight, comma separated")->required();
  orb->add_option("--p", op, "Prime");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what(), out);
    return kExitInputError;
  }

  const Format f = format == "md" ? Format::md : format == "plain" ? Format::plain : Format::json;
  try {
    if (cls->parsed()) return do_classify(ca, f, out);
    if (adj->parsed()) return do_adjoint_table(max_rank, f, out);
    if (sym->parsed()) return do_sympform(sn, sr, smax, f, out);
    if (ten->parsed()) return do_tensor_dims(td, tp, f, out);
    if (orb->parsed()) return do_affine_orbit(od, ow, op, f, out);
  } catch (const InvalidInput& e) {
    emit_error("invalid_input", e.what(), out);
    return kExitInputError;
  } catch (const InternalError& e) {
    emit_error("internal_error", e.what(), out);
    return kExitInternal;
  }
  emit_error("usage", "no subcommand", out);
  return kExitInputError;
}

}  // namespace invforms::cli
