#include "gcfib/germ_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "gcfib/error.hpp"

namespace gcfib {
namespace {

int parse_int(const std::string& token, int line, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, std::string("expected an integer ") + what + ", got '" + token + "'");
}

}  // namespace

GermSpec parse_germ(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<int> n;
  std::optional<Scalar> radius;
  std::vector<std::vector<Monomial>> terms;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string key;
    if (!(tokens >> key) || key.front() == '#') continue;
    std::vector<std::string> args;
    for (std::string tok; tokens >> tok;) args.push_back(tok);

    if (key == "n") {
      if (n) throw ParseError(line_no, "duplicate 'n'");
      if (args.size() != 1) throw ParseError(line_no, "'n' takes one value");
      n = parse_int(args[0], line_no, "for n");
      if (*n < 1) throw ParseError(line_no, "n must be positive");
      terms.assign(static_cast<std::size_t>(2 * *n), {});
    } else if (key == "domain_radius") {
      if (radius) throw ParseError(line_no, "duplicate 'domain_radius'");
      if (args.size() != 1) throw ParseError(line_no, "'domain_radius' takes one value");
      try {
        radius = Scalar::parse(args[0]);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "term") {
      if (!n) throw ParseError(line_no, "'term' before 'n'");
      const auto d = static_cast<std::size_t>(2 * *n);
      if (args.size() != d + 2) {
        throw ParseError(line_no, "'term' needs a function index, a coefficient and " +
                                      std::to_string(d) + " exponents");
      }
      const int fn = parse_int(args[0], line_no, "function index");
      if (fn < 1 || fn > 2 * *n) {
        throw ParseError(line_no, "function index " + args[0] + " outside 1.." + std::to_string(2 * *n));
      }
      Monomial m;
      try {
        m.coefficient = Scalar::parse(args[1]);
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
      for (std::size_t k = 0; k < d; ++k) {
        const int e = parse_int(args[k + 2], line_no, "exponent");
        if (e < 0) throw ParseError(line_no, "negative exponent");
        m.exponents.push_back(e);
      }
      if (m.degree() > kMaxPolynomialDegree) {
        throw ParseError(line_no, "term degree exceeds " + std::to_string(kMaxPolynomialDegree));
      }
      terms[fn - 1].push_back(std::move(m));
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!n) throw ParseError(0, "germ file has no 'n'");
  if (!radius) radius = Scalar(Rational(1, 10));

  std::vector<Polynomial> f;
  for (auto& t : terms) f.emplace_back(2 * *n, std::move(t));
  return GermSpec(*n, std::move(f), *radius);
}

GermSpec read_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_germ(buffer.str());
}

std::string format_germ(const GermSpec& g) {
  std::ostringstream out;
  out << "# great-circle germ: term <function> <coefficient> <exponents of x1..x" << g.dim() << ">\n";
  out << "n " << g.n() << "\n";
  out << "domain_radius " << g.domain_radius_exact().to_string() << "\n";
  for (int i = 0; i < g.dim(); ++i) {
    for (const auto& t : g.twist_functions()[i].terms()) {
      out << "term " << i + 1 << ' ' << t.coefficient.to_string();
      for (int e : t.exponents) out << ' ' << e;
      out << '\n';
    }
  }
  return out.str();
}

void write_germ_file(const GermSpec& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << format_germ(g);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace gcfib
