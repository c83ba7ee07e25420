#include "tube/app/spec_parser.hpp"

#include <cctype>

#include "tube/linalg/echelon.hpp"

namespace tube::app {

namespace {

using linalg::QMatrix;

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::size_t pos() const { return i_; }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) throw ParseError("expected '" + std::string(tok) + "'", pos());
  }
  std::string word() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }
  std::size_t count() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected a positive integer", start);
    return std::stoul(std::string(s_.substr(start, i_ - start)));
  }
  Rat rational() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
    auto text = s_.substr(start, i_ - start);
    try {
      return parse_rat(text);
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + std::string(text) + "'", start);
    }
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::size_t rank_of(QMatrix m) { return linalg::rank(linalg::RationalField{}, std::move(m)); }

// Rows of the stacked columns of every generator, read as a rows x cols matrix.
QMatrix stacked_columns(const std::vector<QMatrix>& ms) {
  if (ms.empty()) return QMatrix(0, 0);
  QMatrix out(ms.size() * ms[0].cols(), ms[0].rows());
  std::size_t r = 0;
  for (const auto& m : ms)
    for (std::size_t j = 0; j < m.cols(); ++j, ++r)
      for (std::size_t i = 0; i < m.rows(); ++i) out(r, i) = m(i, j);
  return out;
}

std::vector<QMatrix> as_symmetric(std::size_t n, const std::vector<QVector>& l, bool skew) {
  std::vector<QMatrix> out;
  for (const auto& v : l) {
    QMatrix m(n, n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = skew ? i + 1 : i; j < n; ++j, ++c) {
        m(i, j) = v.at(c);
        m(j, i) = skew ? Rat(-v[c]) : v[c];
      }
    out.push_back(std::move(m));
  }
  return out;
}

long tri(long x) { return x * (x + 1) / 2; }

zoo::ParamVariety make_base(BaseKind kind, std::size_t a, std::size_t b) {
  switch (kind) {
    case BaseKind::kQuadric: return zoo::make_quadric(a);
    case BaseKind::kSegre: return zoo::make_segre(a, b);
    case BaseKind::kVeronese: return zoo::make_veronese2(a);
    case BaseKind::kPluecker: return zoo::make_pluecker_rank2(a);
    case BaseKind::kSpinor: return zoo::make_spinor5();
    case BaseKind::kSeveri: return zoo::make_severi_e6();
    case BaseKind::kSympl: return zoo::make_sympl(a, b);
  }
  throw BadDimension("unknown variety");
}

void parse_base(Lexer& lx, ParsedSpec& out) {
  std::size_t at = lx.pos();
  std::string name = lx.word();
  if (name == "quadric" || name == "veronese" || name == "pluecker") {
    lx.expect(":");
    out.a = lx.count();
    out.kind = name == "quadric" ? BaseKind::kQuadric : name == "veronese" ? BaseKind::kVeronese : BaseKind::kPluecker;
    std::size_t min = name == "quadric" ? 3 : name == "veronese" ? 1 : 2;
    if (out.a < min) throw ParseError(name + " needs n >= " + std::to_string(min), at);
  } else if (name == "segre") {
    lx.expect(":");
    out.a = lx.count();
    if (!lx.accept("x") && !lx.accept("X") && !lx.accept("\xC3\x97")) throw ParseError("expected 'x'", lx.pos());
    out.b = lx.count();
    out.kind = BaseKind::kSegre;
  } else if (name == "spinor") {
    if (lx.accept(":")) {
      std::size_t n_at = lx.pos();
      if (lx.count() != 5) throw ParseError("only spinor:5 is available", n_at);
    }
    out.kind = BaseKind::kSpinor;
  } else if (name == "severi") {
    out.kind = BaseKind::kSeveri;
  } else if (name == "sympl") {
    lx.expect(":");
    out.a = lx.count();
    lx.expect(",");
    out.b = lx.count();
    out.kind = BaseKind::kSympl;
  } else {
    throw ParseError("unknown variety '" + name + "'", at);
  }
  out.variety = make_base(out.kind, out.a, out.b);
}

void set_expectation(ParsedSpec& s) {
  const bool proj = !s.projection.empty();
  switch (s.kind) {
    case BaseKind::kQuadric:
      if (!proj) s.expected = static_cast<long>(s.a);
      s.anchor = "aut^(1) of the hyperquadric VMRT has dim Q^n = n";
      break;
    case BaseKind::kSegre:
      s.expected = proj ? segre_projection_dim(s.a, s.b, s.projection) : static_cast<long>(s.a * s.b);
      s.anchor = proj ? "projected Segre: aut^(1) = Hom(B/Im L, Ker L)" : "aut^(1) of the Segre VMRT has dim Gr(a,a+b) = ab";
      break;
    case BaseKind::kVeronese:
      s.expected = proj ? veronese_projection_dim(s.a, s.projection) : tri(static_cast<long>(s.a));
      s.anchor = proj ? "projected Veronese: aut^(1) = Sym^2(W/Im L)^*" : "aut^(1) of the Veronese VMRT has dim Lag(n,2n) = n(n+1)/2";
      break;
    case BaseKind::kPluecker:
      s.expected = proj ? pluecker_projection_dim(s.a, s.projection) : static_cast<long>(s.a * (s.a - 1) / 2);
      s.anchor = proj ? "projected Pluecker: aut^(1) = Wedge^2(W/Im L)^*" : "aut^(1) of the Pluecker VMRT has dim S_n = n(n-1)/2";
      break;
    case BaseKind::kSpinor:
      if (!proj) s.expected = 16;
      s.anchor = "aut^(1) of the spinor VMRT has dim E6/P1 = 16";
      break;
    case BaseKind::kSeveri:
      if (!proj) s.expected = 27;
      s.anchor = "aut^(1) of the Cayley plane VMRT has dim E7/P7 = 27";
      break;
    case BaseKind::kSympl:
      s.expected = proj ? sympl_projection_dim(s.a, s.b, s.projection) : tri(static_cast<long>(s.a));
      s.anchor = proj ? "projected symplectic VMRT: aut^(1) = Sym^2(W/Im_W L)^*"
                      : "aut^(1) of the symplectic Grassmannian VMRT is Sym^2 W^*";
      break;
  }
  if (proj && !s.expected) s.anchor.clear();
}

}  // namespace

long segre_projection_dim(std::size_t a, std::size_t b, const std::vector<QVector>& l) {
  // An a x b matrix maps Q^b -> Q^a; t = dim of the joint image, s = dim of the joint kernel.
  std::vector<QMatrix> ms;
  for (const auto& v : l) {
    QMatrix m(a, b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) m(i, j) = v.at(i * b + j);
    ms.push_back(std::move(m));
  }
  std::size_t t = rank_of(stacked_columns(ms));
  QMatrix rows(ms.size() * a, b);
  for (std::size_t g = 0; g < ms.size(); ++g)
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) rows(g * a + i, j) = ms[g](i, j);
  std::size_t s = b - rank_of(rows);
  return static_cast<long>((a - t) * s);
}

long veronese_projection_dim(std::size_t n, const std::vector<QVector>& l) {
  long r = static_cast<long>(rank_of(stacked_columns(as_symmetric(n, l, false))));
  return tri(static_cast<long>(n) - r);
}

long pluecker_projection_dim(std::size_t n, const std::vector<QVector>& l) {
  long t = static_cast<long>(rank_of(stacked_columns(as_symmetric(n, l, true))));
  long d = static_cast<long>(n) - t;
  return d * (d - 1) / 2;
}

long sympl_projection_dim(std::size_t k, std::size_t m, const std::vector<QVector>& l) {
  // Im_W of (S, eta) is spanned by the columns of S and of eta.
  QMatrix cols(l.size() * (k + m), k);
  std::size_t r = 0;
  std::size_t sym = k * (k + 1) / 2;
  for (const auto& v : l) {
    auto s = as_symmetric(k, {QVector(v.begin(), v.begin() + static_cast<long>(sym))}, false)[0];
    for (std::size_t j = 0; j < k; ++j, ++r)
      for (std::size_t i = 0; i < k; ++i) cols(r, i) = s(i, j);
    for (std::size_t q = 0; q < m; ++q, ++r)
      for (std::size_t i = 0; i < k; ++i) cols(r, i) = v.at(sym + i * m + q);
  }
  long t = static_cast<long>(rank_of(cols));
  return tri(static_cast<long>(k) - t);
}

ParsedSpec parse_spec(std::string_view text, std::uint64_t seed) {
  Lexer lx(text);
  ParsedSpec out;
  if (lx.accept("project")) {
    lx.expect("(");
    parse_base(lx, out);
    const std::size_t n = out.variety.ambient_dim;
    while (lx.accept(";")) {
      lx.skip_ws();
      std::size_t at = lx.pos();
      QVector v{lx.rational()};
      while (lx.accept(",")) v.push_back(lx.rational());
      if (v.size() != n)
        throw ParseError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n), at);
      out.projection.push_back(std::move(v));
    }
    lx.expect(")");
    if (!lx.done()) throw ParseError("trailing input", lx.pos());
    auto base = out.variety;
    zoo::ProjectOptions opts;
    opts.seed = seed;
    opts.secant = out.kind != BaseKind::kSympl;
    out.variety = zoo::project(base, linalg::span_q(n, out.projection), opts);
    std::string name = "project(" + base.name;
    for (const auto& v : out.projection) {
      name += "; ";
      for (std::size_t i = 0; i < v.size(); ++i) name += (i ? "," : "") + to_string(v[i]);
    }
    out.variety.name = name + ")";
  } else {
    parse_base(lx, out);
    if (!lx.done()) throw ParseError("trailing input", lx.pos());
  }
  set_expectation(out);
  out.variety.expected_dim_aut1 = out.expected ? std::optional<std::size_t>(*out.expected) : std::nullopt;
  return out;
}

}  // namespace tube::app
