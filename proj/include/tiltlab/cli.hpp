#pragma once

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tiltlab/reproduce.hpp"

namespace tiltlab::cli {

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 check failure, 2 usage or input error
  std::string out;
};

struct CommandInfo {
  std::string path;
  std::vector<std::string> operations;
};

/// Every subcommand and the library operations it exercises.
inline std::vector<CommandInfo> command_table() {
  return {
      {"algebra build", {"build_algebra", "hom_projectives"}},
      {"algebra cartan", {"build_algebra", "cartan_matrix", "graded_cartan"}},
      {"algebra loewy", {"build_algebra", "loewy_layers"}},
      {"brauer build", {"graph_to_presentation", "catalogue"}},
      {"brauer discrete", {"is_tilting_discrete", "catalogue"}},
      {"brauer catalogue", {"catalogue"}},
      {"mutate left", {"stalk", "minimal_left_approximation", "mutate_left"}},
      {"mutate right", {"stalk", "mutate_right"}},
      {"endalg", {"stalk", "end_algebra", "homotopy_hom", "is_silting", "mutate_left"}},
      {"match", {"end_algebra", "presentation_match", "mutate_left"}},
      {"crystal ftilde", {"f_tilde", "signature_word"}},
      {"crystal etilde", {"e_tilde", "signature_word"}},
      {"crystal h", {"h_involution", "is_kleshchev", "splits_on_restriction"}},
      {"crystal block", {"block_beta"}},
      {"crystal orbit", {"weyl_orbit_weight"}},
      {"decomp solve", {"solve_decomposition"}},
      {"decomp line", {"brauer_line_decomposition"}},
      {"wild verify", {"build_wild_fixture", "verify_graded_dims", "cellularity_obstruction", "projective_report"}},
      {"reproduce-paper", {"run"}},
  };
}

struct Options {
  std::string format = "text", field = "Q";
  // algebra source
  std::string presentation_file, graph_file, catalogue_name, fixture;
  // complex source
  std::string complex_file;
  int mutate_at = 0;
  // match target
  std::string target_file, target_fixture;
  std::string hom;
  bool graded = false, show_approx = false, signature = false, report = false, details = false;
  std::string vertex;
  int summand = 0;
  std::string bipartition, ops, word, cartan;
  int residue = -1, e = 2, rows = 0, bound = 0, n = 0;
  std::string name;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class K>
Presentation<K> fixture_presentation(const std::string& name) {
  if (name == "A(2,2,2)") return fixtures::a222<K>();
  if (name == "A(2,2,1)") return fixtures::a221<K>();
  if (name == "A(2,1,2)") return fixtures::a212<K>();
  if (name == "kronecker") return fixtures::kronecker<K>();
  if (name == "wild") return fixtures::wild_presentation<K>().opposite();
  throw Error(ErrorKind::UnknownName, "unknown fixture '" + name + "'");
}

inline BrauerGraph graph_source(const Options& o) {
  if (!o.graph_file.empty()) return parse_graph(read_file(o.graph_file));
  if (!o.catalogue_name.empty()) return catalogue(o.catalogue_name).graph;
  throw Error(ErrorKind::InvalidArgument, "need --graph or --catalogue");
}

template <class K>
Presentation<K> presentation_source(const Options& o) {
  int given = !o.presentation_file.empty() + !o.graph_file.empty() + !o.catalogue_name.empty() + !o.fixture.empty();
  if (given != 1) throw Error(ErrorKind::InvalidArgument, "give exactly one of --presentation, --graph, --catalogue, --fixture");
  if (!o.presentation_file.empty()) return parse_presentation<K>(read_file(o.presentation_file));
  if (!o.fixture.empty()) return fixture_presentation<K>(o.fixture);
  return graph_to_presentation<K>(graph_source(o));
}

template <class K>
Presentation<K> target_source(const Options& o) {
  if (!o.target_file.empty() == !o.target_fixture.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --target, --target-fixture");
  if (!o.target_file.empty()) return parse_presentation<K>(read_file(o.target_file));
  return fixture_presentation<K>(o.target_fixture);
}

template <class K>
int summand_index(const ProjComplex<K>& T, int one_based) {
  if (one_based < 1 || one_based > static_cast<int>(T.summands.size()))
    throw Error(ErrorKind::InvalidArgument, "summand " + std::to_string(one_based) + " out of range 1.." + std::to_string(T.summands.size()));
  return one_based - 1;
}

template <class K>
ProjComplex<K> complex_source(const AlgebraPtr<K>& A, const Options& o) {
  ProjComplex<K> T = o.complex_file.empty() ? stalk(A) : parse_proj_complex(A, read_file(o.complex_file));
  if (o.mutate_at > 0) T = mutate_left(T, summand_index(T, o.mutate_at));
  return T;
}

inline int vertex_of(const Quiver& q, const std::string& id) {
  try {
    return q.vertex_index(id);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "unknown vertex '" + id + "'");
  }
}

inline std::string matrix_block(const std::string& title, const IntMatrix& m, bool machine) {
  if (machine) return title + "\n" + format_int_matrix(m) + "end\n";
  std::string s = title + ":\n";
  for (auto& line : tiltlab::detail::lines_of(format_int_matrix(m))) s += "  " + line + "\n";
  return s;
}

inline std::string layer_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

inline std::string signature_text(const std::vector<SignatureEntry>& w) {
  std::string s;
  for (auto& x : w)
    s += (s.empty() ? "" : " ") + std::string(1, x.kind) + "(" + std::to_string(x.comp) + "," + std::to_string(x.row) + "," +
         std::to_string(x.col) + ")";
  return s.empty() ? "-" : s;
}

inline std::string residues_text(const std::vector<int>& seq) {
  // seq lists residues from the outermost operator inward.
  std::string s;
  for (int i : seq) s += (s.empty() ? "f" : " f") + std::to_string(i);
  return s.empty() ? "id" : s;
}

// ---------------------------------------------------------------- commands

template <class K>
CommandResult algebra_cmd(const std::string& sub, const Options& o) {
  bool m = o.format == "machine";
  auto A = build_algebra(presentation_source<K>(o));
  std::ostringstream os;
  if (sub == "build") {
    os << format_algebra_summary(*A);
    if (!o.hom.empty()) {
      auto w = tiltlab::detail::split_ws(o.hom);
      if (w.size() != 2) throw Error(ErrorKind::InvalidArgument, "--hom takes two vertex ids, e.g. \"1 2\"");
      int i = vertex_of(A->quiver(), w[0]), j = vertex_of(A->quiver(), w[1]);
      os << "hom P" << w[0] << " -> P" << w[1] << ":";
      for (auto& v : hom_projectives(*A, i, j)) os << " " << A->format(v);
      os << "\n";
    }
  } else if (sub == "cartan") {
    os << matrix_block("cartan", A->cartan_matrix(), m);
    if (o.graded) {
      auto g = A->graded_cartan();
      os << (m ? "graded-cartan\n" : "graded cartan:\n");
      for (auto& row : g) {
        os << (m ? "" : "  ");
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? (m ? ";" : " ; ") : "") << format_poly(wild::trimmed(row[j]));
        os << "\n";
      }
      if (m) os << "end\n";
    }
  } else {
    os << (m ? "loewy-length " : "Loewy length ") << A->loewy_length() << "\n";
    for (int v = 0; v < A->num_vertices(); ++v) {
      if (!o.vertex.empty() && vertex_of(A->quiver(), o.vertex) != v) continue;
      const auto& id = A->quiver().vertex(v);
      os << (m ? "projective " : "P") << id << (m ? "\n" : ":\n");
      auto layers = A->loewy_layers(v);
      for (std::size_t k = 0; k < layers.size(); ++k) os << (m ? "layer " : "  layer ") << k << (m ? " " : ": ") << layer_text(layers[k]) << "\n";
      if (m) os << "end\n";
    }
  }
  return {0, os.str()};
}

inline CommandResult brauer_cmd(const std::string& sub, const Options& o) {
  bool m = o.format == "machine";
  std::ostringstream os;
  if (sub == "catalogue") {
    if (o.name.empty()) {
      for (auto& n : catalogue_names()) os << n << "\n";
    } else {
      os << format_graph(catalogue(o.name).graph);
    }
    return {0, os.str()};
  }
  auto g = graph_source(o);
  if (sub == "build") return {0, format_presentation(graph_to_presentation<Rational>(g))};
  auto r = is_tilting_discrete(g);
  if (m) os << "discrete " << (r.discrete ? "true" : "false") << "\nwitness " << r.witness << "\n";
  else os << (r.discrete ? "true: " : "false: ") << r.witness << "\n";
  return {0, os.str()};
}

template <class K>
std::string approximation_text(const Approximation<K>& ap) {
  std::string s;
  for (auto& [c, coords] : ap.components) s += (s.empty() ? "T" : "+T") + std::to_string(c + 1);
  return s.empty() ? "0" : s;
}

template <class K>
CommandResult mutate_cmd(const std::string& sub, const Options& o) {
  auto A = build_algebra(presentation_source<K>(o));
  ProjComplex<K> T = o.complex_file.empty() ? stalk(A) : parse_proj_complex(A, read_file(o.complex_file));
  int x = summand_index(T, o.summand);
  std::ostringstream os;
  if (o.show_approx) {
    SummandCategory<K> C(T.summands);
    auto others = other_indices<K>(static_cast<int>(T.summands.size()), x);
    auto ap = sub == "left" ? minimal_left_approximation(C, x, others) : minimal_right_approximation(C, x, others);
    os << "# approximation T" << x + 1 << (sub == "left" ? " -> " : " <- ") << approximation_text(ap) << "\n";
  }
  os << format_proj_complex(sub == "left" ? mutate_left(T, x) : mutate_right(T, x));
  return {0, os.str()};
}

template <class K>
CommandResult endalg_cmd(const Options& o) {
  bool m = o.format == "machine";
  auto A = build_algebra(presentation_source<K>(o));
  auto T = complex_source(A, o);
  auto E = end_algebra(T);
  auto rep = silting_report(T);
  std::ostringstream os;
  os << (m ? "dim " : "dimension: ") << E.dim() << "\n";
  os << matrix_block("cartan", E.cartan_matrix(), m);
  os << (m ? "loewy-length " : "Loewy length: ") << E.loewy_length() << "\n";
  os << (m ? "silting " : "silting: ") << (rep.silting ? "true" : "false") << "\n";
  os << (m ? "tilting " : "tilting: ") << (rep.tilting ? "true" : "false") << "\n";
  for (auto& [s, d] : rep.nonzero) os << (m ? "hom-shift " : "  Hom(T,T[") << s << (m ? " " : "]) = ") << d << "\n";
  os << format_presentation(E.extracted().presentation);
  return {0, os.str()};
}

template <class K>
CommandResult match_cmd(const Options& o) {
  bool m = o.format == "machine";
  auto A = build_algebra(presentation_source<K>(o));
  auto E = end_algebra(complex_source(A, o));
  auto Q = target_source<K>(o);
  auto r = presentation_match(E.extracted().presentation, Q);
  std::ostringstream os;
  if (m) {
    os << "matched " << (r.matched ? "true" : "false") << "\n";
    if (r.matched) os << format_witness(E.extracted().presentation, Q, r.witness) << "\n";
    else os << "reason " << r.reason << "\n";
  } else {
    os << (r.matched ? "match over " + FieldTraits<K>::name() + "\n" : "no match over " + FieldTraits<K>::name() + ": " + r.reason + "\n");
    if (r.matched) os << format_witness(E.extracted().presentation, Q, r.witness) << "\n";
  }
  return {r.matched ? 0 : 1, os.str()};
}

inline CommandResult crystal_cmd(const std::string& sub, const Options& o) {
  bool m = o.format == "machine";
  CrystalContext ctx(o.e);
  std::ostringstream os;
  if (sub == "orbit") {
    auto w = weyl_orbit_weight(o.word, ctx);
    os << (m ? "" : "Lambda - w Lambda = ") << format_roots(w) << "\n";
    return {0, os.str()};
  }
  if (o.bipartition.empty()) throw Error(ErrorKind::InvalidArgument, "--bipartition is required");
  auto l = parse_bipartition(o.bipartition);
  if (sub == "ftilde" || sub == "etilde") {
    std::optional<Bipartition> r;
    if (!o.ops.empty()) {
      if (o.residue >= 0) throw Error(ErrorKind::InvalidArgument, "give --residue or --ops, not both");
      r = apply_operators(o.ops, l, ctx);
    } else {
      if (o.residue < 0) throw Error(ErrorKind::InvalidArgument, "--residue or --ops is required");
      if (o.signature) {
        auto w = signature_word(l, o.residue, ctx);
        os << (m ? "signature " : "signature: ") << signature_text(w) << "\n";
        os << (m ? "reduced " : "reduced:   ") << signature_text(tiltlab::detail::reduced_signature(w)) << "\n";
      }
      r = sub == "ftilde" ? f_tilde(l, o.residue, ctx) : e_tilde(l, o.residue, ctx);
    }
    os << (r ? format_bipartition(*r) : std::string("undefined")) << "\n";
    return {0, os.str()};
  }
  if (sub == "h") {
    auto seq = kleshchev_string(l, ctx);
    if (!seq) throw Error(ErrorKind::NotKleshchev, format_bipartition(l) + " is not Kleshchev");
    auto h = h_involution(l, ctx);
    std::vector<int> rev(seq->rbegin(), seq->rend());
    if (m) {
      os << "h " << format_bipartition(h) << "\nstring " << residues_text(rev) << "\nsplits " << (h == l ? "true" : "false") << "\n";
    } else {
      os << "h(" << format_bipartition(l) << ") = " << format_bipartition(h) << "\n";
      os << "string: " << residues_text(rev) << " []\n";
      os << "splits on restriction: " << (h == l ? "yes" : "no") << "\n";
    }
    return {0, os.str()};
  }
  auto b = block_beta(l, ctx);
  os << (m ? "" : "beta = ") << format_roots(b) << "\n";
  return {0, os.str()};
}

inline CommandResult decomp_cmd(const std::string& sub, const Options& o) {
  bool m = o.format == "machine";
  if (sub == "line") {
    auto D = brauer_line_decomposition(o.n);
    return {0, matrix_block("decomposition", D, m)};
  }
  auto C = parse_inline_matrix(o.cartan);
  auto sols = solve_decomposition(C, o.rows, o.bound);
  std::string s;
  if (!m) s = sols.size() == 1 ? "unique solution:\n" : std::to_string(sols.size()) + " solutions up to row permutation:\n";
  return {0, s + format_solutions(sols, m)};
}

template <class K>
CommandResult wild_cmd(const Options& o) {
  auto cs = wild_verify<K>();
  std::string s = format_checks(cs);
  if (o.report) {
    auto F = build_wild_fixture<K>();
    for (int x : {0, 1}) {
      auto W = wild_mutation(F, x);
      auto rep = projective_report(W.end);
      for (std::size_t i = 0; i < rep.size(); ++i)
        s += "LAYERS mu" + std::to_string(x + 1) + " P" + std::to_string(i + 1) + " " + format_layers(rep[i].layers) + " top=" +
             std::to_string(rep[i].top) + " socle=" + std::to_string(rep[i].socle) + "\n";
    }
  }
  bool ok = all_pass(cs);
  s += ok ? "wild verify: all checks pass\n" : "wild verify: FAILED\n";
  return {ok ? 0 : 1, s};
}

inline CommandResult reproduce_cmd(const Options& o) {
  auto rs = run_acceptance();
  std::string s;
  bool ok = true;
  for (auto& r : rs) {
    s += format_criterion(r, o.details);
    ok &= r.pass;
  }
  int passed = 0;
  for (auto& r : rs) passed += r.pass;
  s += std::to_string(passed) + "/" + std::to_string(rs.size()) + " criteria pass\n";
  return {ok ? 0 : 1, s};
}

template <class K>
CommandResult dispatch_field(const std::string& cmd, const std::string& sub, const Options& o) {
  if (cmd == "algebra") return algebra_cmd<K>(sub, o);
  if (cmd == "mutate") return mutate_cmd<K>(sub, o);
  if (cmd == "endalg") return endalg_cmd<K>(o);
  if (cmd == "match") return match_cmd<K>(o);
  return wild_cmd<K>(o);
}

inline CommandResult dispatch(const std::string& cmd, const std::string& sub, const Options& o) {
  if (cmd == "brauer") return brauer_cmd(sub, o);
  if (cmd == "crystal") return crystal_cmd(sub, o);
  if (cmd == "decomp") return decomp_cmd(sub, o);
  if (cmd == "reproduce-paper") return reproduce_cmd(o);
  const std::string& f = o.field;
  if (f == "Q") return dispatch_field<Rational>(cmd, sub, o);
  if (f == "Q(i)") return dispatch_field<GaussianRational>(cmd, sub, o);
  if (f == "F2") return dispatch_field<Zp<2>>(cmd, sub, o);
  if (f == "F3") return dispatch_field<Zp<3>>(cmd, sub, o);
  if (f == "F5") return dispatch_field<Zp<5>>(cmd, sub, o);
  if (f == "F7") return dispatch_field<Zp<7>>(cmd, sub, o);
  if (f == "F101") return dispatch_field<Zp<101>>(cmd, sub, o);
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + f + "' (Q, Q(i), F2, F3, F5, F7, F101)");
}

inline void add_common(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
}

inline void add_field(CLI::App* c, Options& o) { c->add_option("--field", o.field, "Q, Q(i), F2, F3, F5, F7 or F101"); }

inline void add_algebra_source(CLI::App* c, Options& o) {
  c->add_option("--presentation", o.presentation_file, "presentation file");
  c->add_option("--graph", o.graph_file, "Brauer graph file");
  c->add_option("--catalogue", o.catalogue_name, "Brauer graph catalogue name");
  c->add_option("--fixture", o.fixture, "A(2,2,2), A(2,2,1), A(2,1,2), kronecker or wild");
  add_field(c, o);
}

inline void add_complex_source(CLI::App* c, Options& o) {
  c->add_option("--complex", o.complex_file, "complex file (default: the stalk complex)");
  c->add_option("--mutate-left", o.mutate_at, "left-mutate at this summand (1-based) first");
}

}  // namespace detail

/// Runs one command line (without the program name).
inline CommandResult run(const std::vector<std::string>& args) {
  using namespace detail;
  Options o;
  CLI::App app{"tiltlab: tilting mutation and crystal computations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  std::string chosen, chosen_sub;
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& cmd, const std::string& sub, const std::string& desc) {
    auto* c = parent->add_subcommand(sub, desc);
    add_common(c, o);
    c->callback([&chosen, &chosen_sub, cmd, sub] {
      chosen = cmd;
      chosen_sub = sub;
    });
    return c;
  };

  auto* alg = group("algebra", "bound quiver algebras");
  {
    auto* c = leaf(alg, "algebra", "build", "dimension, Cartan matrix and basis");
    add_algebra_source(c, o);
    c->add_option("--hom", o.hom, "also list a basis of Hom(P_i,P_j), given as \"i j\"");
    c = leaf(alg, "algebra", "cartan", "Cartan matrix");
    add_algebra_source(c, o);
    c->add_flag("--graded", o.graded, "also print the graded Cartan matrix");
    c = leaf(alg, "algebra", "loewy", "radical layers of the projectives");
    add_algebra_source(c, o);
    c->add_option("--vertex", o.vertex, "only this projective");
  }
  auto* br = group("brauer", "Brauer graphs");
  {
    auto* c = leaf(br, "brauer", "build", "presentation of the Brauer graph algebra");
    c->add_option("--graph", o.graph_file, "Brauer graph file");
    c->add_option("--catalogue", o.catalogue_name, "catalogue name");
    c = leaf(br, "brauer", "discrete", "tilting discreteness with witness");
    c->add_option("--graph", o.graph_file, "Brauer graph file");
    c->add_option("--catalogue", o.catalogue_name, "catalogue name");
    c = leaf(br, "brauer", "catalogue", "list the catalogue or print one graph");
    c->add_option("--name", o.name, "catalogue entry to print");
  }
  auto* mu = group("mutate", "irreducible silting mutation");
  for (std::string side : {"left", "right"}) {
    auto* c = leaf(mu, "mutate", side, side + " mutation at one summand");
    add_algebra_source(c, o);
    c->add_option("--complex", o.complex_file, "complex file (default: the stalk complex)");
    c->add_option("--summand", o.summand, "summand to mutate (1-based)")->required();
    c->add_flag("--approximation", o.show_approx, "print the minimal approximation first");
  }
  {
    auto* c = app.add_subcommand("endalg", "endomorphism algebra of a complex in the homotopy category");
    add_common(c, o);
    add_algebra_source(c, o);
    add_complex_source(c, o);
    c->callback([&] { chosen = "endalg"; });
    c = app.add_subcommand("match", "compare End(T) with a presentation up to relabelling and rescaling");
    add_common(c, o);
    add_algebra_source(c, o);
    add_complex_source(c, o);
    c->add_option("--target", o.target_file, "target presentation file");
    c->add_option("--target-fixture", o.target_fixture, "target fixture name");
    c->callback([&] { chosen = "match"; });
  }
  auto* cr = group("crystal", "level-two crystal of bipartitions");
  for (std::string side : {"ftilde", "etilde"}) {
    auto* c = leaf(cr, "crystal", side, side == "ftilde" ? "apply f_i or an operator string" : "apply e_i or an operator string");
    c->add_option("--bipartition", o.bipartition, "e.g. \"[2,1|1]\" (\"[|]\" is empty)");
    c->add_option("--residue", o.residue, "residue i");
    c->add_option("--ops", o.ops, "operator string, applied right to left, e.g. \"f0^3 f1\"");
    c->add_option("--e", o.e, "quantum characteristic (even)");
    c->add_flag("--signature", o.signature, "print the i-signature");
  }
  {
    auto* c = leaf(cr, "crystal", "h", "Hu involution and splitting on restriction");
    c->add_option("--bipartition", o.bipartition, "Kleshchev bipartition");
    c->add_option("--e", o.e, "quantum characteristic (even)");
    c = leaf(cr, "crystal", "block", "block weight beta");
    c->add_option("--bipartition", o.bipartition, "bipartition");
    c->add_option("--e", o.e, "quantum characteristic (even)");
    c = leaf(cr, "crystal", "orbit", "Lambda - w Lambda for an alternating word (e = 2)");
    c->add_option("--word", o.word, "e.g. \"s0 s1 s0\"")->required();
  }
  auto* de = group("decomp", "decomposition matrices");
  {
    auto* c = leaf(de, "decomp", "solve", "all D with D^T D = C");
    c->add_option("--cartan", o.cartan, "Cartan matrix, e.g. \"3 1;1 3\"")->required();
    c->add_option("--rows", o.rows, "number of rows")->required();
    c->add_option("--bound", o.bound, "entry bound (default: largest diagonal entry)");
    c = leaf(de, "decomp", "line", "decomposition matrix of the Brauer line with n edges");
    c->add_option("--n", o.n, "number of edges")->required();
  }
  auto* wi = group("wild", "four-vertex wild example");
  {
    auto* c = leaf(wi, "wild", "verify", "graded dimensions, mutations, obstruction and layers");
    add_field(c, o);
    c->add_flag("--report", o.report, "also print the layer reports");
  }
  {
    auto* c = app.add_subcommand("reproduce-paper", "run the full acceptance suite");
    add_common(c, o);
    c->add_flag("--details", o.details, "print every check");
    c->callback([&] { chosen = "reproduce-paper"; });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {0, out.str()};
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return {0, out.str()};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {2, err.str() + out.str() + app.help()};
  }
  try {
    return dispatch(chosen, chosen_sub, o);
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace tiltlab::cli
