// Command-line front end for the twoloop library.
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twoloop/contraction.hpp"
#include "twoloop/covers.hpp"
#include "twoloop/errors.hpp"
#include "twoloop/freealg.hpp"
#include "twoloop/io.hpp"
#include "twoloop/laurent.hpp"
#include "twoloop/rozansky.hpp"
#include "twoloop/surgery.hpp"
#include "twoloop/theta.hpp"

namespace {

using namespace twoloop;

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& s, int column) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(1, column, "expected an integer, got '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw ParseError(1, column + static_cast<int>(used), "trailing input");
  return v;
}

Rational parse_rational(const std::string& s) {
  const LaurentPoly p = parse_laurent(s);
  if (!p.is_constant()) throw ParseError(1, 1, "expected a rational number");
  return p.coeff(0);
}

LaurentPoly read_poly_file(const std::string& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<LaurentPoly> result;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (result) throw ParseError(lineno, static_cast<int>(first) + 1, "expected a single polynomial");
    result = parse_laurent(line, lineno);
  }
  if (!result) throw ParseError(lineno + 1, 1, "missing polynomial");
  return *result;
}

void print_lattices(const ThetaElement& x, std::initializer_list<int> ks) {
  for (int k : ks) std::cout << "in_lattice(" << k << "): " << yes_no(in_lattice(x, k)) << "\n";
}

int run_canon(const std::string& triple, const std::string& colors, const std::string& delta_text) {
  if (!triple.empty()) {
    const auto parts = split(triple, ',');
    if (parts.size() != 3) throw ParseError(1, 1, "expected three comma-separated exponents");
    int column = 1;
    std::array<int, 3> e{};
    for (std::size_t i = 0; i < 3; ++i) {
      e[i] = parse_int(parts[i], column);
      column += static_cast<int>(parts[i].size()) + 1;
    }
    const CanonicalPair p = canonical_pair(e[0], e[1], e[2]);
    std::cout << p.m << " " << p.n << " 1\n";
    return 0;
  }
  const auto parts = split(colors, ';');
  if (parts.size() != 3) throw ParseError(1, 1, "expected three ';'-separated colours");
  const LaurentPoly delta = delta_text.empty() ? LaurentPoly(1) : parse_laurent(delta_text);
  int column = 0;
  std::array<LaurentPoly, 3> c;
  for (std::size_t i = 0; i < 3; ++i) {
    c[i] = parse_laurent(parts[i], 1, column);
    column += static_cast<int>(parts[i].size()) + 1;
  }
  std::cout << to_string(from_theta({c[0], c[1], c[2]}, delta));
  return 0;
}

int run_dumbbell(const std::string& p, const std::string& r, const std::string& q, const std::string& delta) {
  const LaurentPoly d = delta.empty() ? LaurentPoly(1) : parse_laurent(delta);
  std::cout << to_string(reduce_dumbbell(parse_laurent(p), parse_laurent(r), parse_laurent(q), d));
  return 0;
}

int run_hair(const std::string& theta_path, int degree) {
  const ThetaElement x = parse_theta(read_text_file(theta_path));
  const BivariateSeries s = hair(x, degree);
  for (const auto& [k, c] : s.terms()) std::cout << k.first << " " << k.second << " " << c.get_str() << "\n";
  return 0;
}

int run_bch_verify() {
  const bool zt = zt_identity_check();
  std::cout << "Z(T)=exp([a,b]): " << (zt ? "OK" : "FAILED") << "\n";
  bool bch = true;
  for (int p = 1; p <= 4; ++p) bch = bch && bch_operator(p, 3) == exp_product(p, 3);
  std::cout << "H(p)=BCH(p): " << (bch ? "OK" : "FAILED") << " for p=1..4\n";
  return zt && bch ? 0 : kExitInvariant;
}

int run_surgery(const std::string& pairing_path, const std::string& mu_path) {
  const MatrixFile pairing = parse_matrix_file(read_text_file(pairing_path));
  if (pairing.matrix.size() != 3) throw DomainError("leaf pairing must be 3x3");
  ThetaElement mu = parse_theta(read_text_file(mu_path));
  if (mu.is_zero()) mu = ThetaElement(pairing.denominator);
  if (mu.denominator() != pairing.denominator)
    throw DomainError("mu and the leaf pairing must share the denominator " + to_string(pairing.denominator));
  const ClasperData c{PairingMatrix(pairing.matrix, pairing.denominator), mu};
  const ThetaElement delta = surgery_delta(c);
  std::cout << to_string(delta);
  print_lattices(delta, {1, 2, 12});
  return 0;
}

int run_phi(const std::string& matrix_path) {
  const MatrixFile file = parse_matrix_file(read_text_file(matrix_path));
  if (file.denominator != LaurentPoly(1)) throw DomainError("phi takes a matrix without denominator");
  const MonomialMatrix w(file.matrix);
  const Verdicts v = phi(w);
  std::cout << to_string(v.value);
  std::cout << "twelfth: " << yes_no(v.in_twelfth) << "\n";
  std::cout << "half: " << yes_no(v.in_half) << "\n";
  std::cout << "half modulo theta: " << yes_no(v.in_half_mod_theta) << "\n";
  std::cout << "casson: " << v.casson.get_str() << " integral=" << yes_no(v.casson_integral) << "\n";
  return 0;
}

unsigned workers_from_env() {
  const char* env = std::getenv("TWOLOOP_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  const int v = parse_int(env, 1);
  if (v < 1) throw DomainError("TWOLOOP_WORKERS must be positive");
  return static_cast<unsigned>(v);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw DomainError("cannot write " + path);
}

int run_scan(int n, int max_exp, const std::string& out_path) {
  if (n < 1 || n > 4) throw DomainError("scan supports 1 <= n <= 4");
  if (max_exp < 0 || max_exp > 3) throw DomainError("scan supports 0 <= max-exp <= 3");
  const ScanReport report = scan(n, max_exp, workers_from_env());
  write_file(out_path, format_report(report));
  std::cout << "matrices: " << report.entries.size() << "\n";
  std::cout << "twelfth failures: " << report.twelfth_failures << "\n";
  std::cout << "half failures: " << report.half_failures << "\n";
  std::cout << "half failures modulo theta: " << report.half_mod_theta_failures << "\n";
  std::cout << "casson failures: " << report.casson_failures << "\n";
  if (report.twelfth_failures == 0) return 0;
  const auto matrices = enumerate_matrices(n, max_exp);
  for (const auto& e : report.entries) {
    if (e.verdicts.in_twelfth) continue;
    const std::string repro = out_path + ".repro";
    write_file(repro, format_matrix_file({matrices[e.index].matrix(), 1}));
    std::cerr << "error: matrix " << e.index << " is outside the 1/12 lattice; reproducer written to " << repro
              << "\n";
    break;
  }
  return kExitInvariant;
}

int run_cover(const std::string& delta_path, int r, const std::string& sigma, const std::string& theta_path) {
  const LaurentPoly delta = read_poly_file(delta_path);
  std::optional<Rational> s, s_prime;
  if (!sigma.empty()) {
    const auto parts = split(sigma, ',');
    if (parts.empty() || parts.size() > 2) throw ParseError(1, 1, "expected --sigma S or --sigma S,S'");
    s = parse_rational(parts[0]);
    s_prime = parts.size() == 2 ? parse_rational(parts[1]) : *s;
  }
  const CoverData c = make_cover(delta, r, s);
  std::cout << "delta_r: " << to_string(c.delta_r) << "\n";
  std::cout << "quotient: " << to_string(c.quotient) << "\n";
  std::cout << "integer_homology_sphere: " << yes_no(c.integer_homology_sphere) << "\n";
  if (!theta_path.empty()) {
    if (!s) throw DomainError("the divisibility verdict needs --sigma");
    const ThetaElement x = parse_theta(read_text_file(theta_path));
    const CassonResidue res = casson_residue(x, r, *s, *s_prime);
    std::cout << "lambda_difference: " << res.lambda_difference.get_str() << "\n";
    std::cout << "divisible_by_r: " << yes_no(res.divisible) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-loop diagram calculus: theta basis, surgery formula, phi scans, covers"};
  app.require_subcommand(1);

  std::string triple, colors, canon_delta;
  auto* canon = app.add_subcommand("canon", "Canonical theta-basis form of an exponent triple or colouring");
  auto* triple_opt = canon->add_option("--triple", triple, "Exponents m,n,k");
  auto* colors_opt = canon->add_option("--colors", colors, "Three colours P;Q;R");
  canon->add_option("--delta", canon_delta, "Common denominator of the colours");
  triple_opt->excludes(colors_opt);

  std::string db_p, db_r, db_q, db_delta;
  auto* dumbbell = app.add_subcommand("dumbbell", "Rewrite a dumbbell in the theta basis");
  dumbbell->add_option("--p", db_p, "First loop colour")->required();
  dumbbell->add_option("--r", db_r, "Central colour")->required();
  dumbbell->add_option("--q", db_q, "Second loop colour")->required();
  dumbbell->add_option("--delta", db_delta, "Common denominator");

  std::string hair_theta;
  int hair_degree = 0;
  auto* hair_cmd = app.add_subcommand("hair", "Expand t = exp(h) up to a total degree");
  hair_cmd->add_option("--theta", hair_theta, "Theta element file")->required();
  hair_cmd->add_option("--degree", hair_degree, "Truncation degree")->required()->check(CLI::Range(0, 64));

  auto* bch = app.add_subcommand("bch-verify", "Check the Z(T) identity and the generalized BCH operator");

  std::string pairing_path, mu_path;
  auto* surgery = app.add_subcommand("surgery", "Change of the 2-loop part under clasper surgery");
  surgery->add_option("--pairing", pairing_path, "3x3 leaf pairing matrix file")->required();
  surgery->add_option("--mu", mu_path, "Theta element file for mu")->required();

  std::string phi_matrix;
  auto* phi_cmd = app.add_subcommand("phi", "Run the phi pipeline on a monomial hermitian matrix");
  phi_cmd->add_option("--matrix", phi_matrix, "Matrix file")->required();

  int scan_n = 0, scan_k = 0;
  std::string scan_out;
  auto* scan_cmd = app.add_subcommand("scan", "Run phi on every monomial matrix of a given size");
  scan_cmd->add_option("--n", scan_n, "Matrix size")->required();
  scan_cmd->add_option("--max-exp", scan_k, "Largest |k| in off-diagonal entries +-t^k")->required();
  scan_cmd->add_option("--out", scan_out, "Report file")->required();

  std::string cover_delta, cover_sigma, cover_theta;
  int cover_r = 0;
  auto* cover = app.add_subcommand("cover", "Alexander polynomial and Casson bookkeeping of a cyclic cover");
  cover->add_option("--delta", cover_delta, "File holding the Alexander polynomial")->required();
  cover->add_option("--r", cover_r, "Cover degree")->required();
  cover->add_option("--sigma", cover_sigma, "Equivariant signature S, or S,S' for two knots");
  cover->add_option("--theta", cover_theta, "Theta element file (difference of two 2-loop parts)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (canon->parsed()) {
      if (triple.empty() && colors.empty()) throw DomainError("canon needs --triple or --colors");
      return run_canon(triple, colors, canon_delta);
    }
    if (dumbbell->parsed()) return run_dumbbell(db_p, db_r, db_q, db_delta);
    if (hair_cmd->parsed()) return run_hair(hair_theta, hair_degree);
    if (bch->parsed()) return run_bch_verify();
    if (surgery->parsed()) return run_surgery(pairing_path, mu_path);
    if (phi_cmd->parsed()) return run_phi(phi_matrix);
    if (scan_cmd->parsed()) return run_scan(scan_n, scan_k, scan_out);
    if (cover->parsed()) return run_cover(cover_delta, cover_r, cover_sigma, cover_theta);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
