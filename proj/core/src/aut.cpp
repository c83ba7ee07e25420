#include "tube/aut/aut.hpp"

#include <type_traits>

#include "tube/error.hpp"

namespace tube::aut {

using linalg::Matrix;
using linalg::QMatrix;

namespace {

template <class F>
constexpr bool kRational = std::is_same_v<F, RationalField>;

// Columns of the jacobian followed by the point, as an N x (m+1) matrix.
QMatrix tangent_generators(const zoo::ParamVariety& x, const zoo::Sample& s) {
  QMatrix j = x.phi.jacobian(s.params);
  QMatrix t(x.ambient_dim, x.param_dim + 1);
  for (std::size_t r = 0; r < x.ambient_dim; ++r) {
    for (std::size_t c = 0; c < x.param_dim; ++c) t(r, c) = j(r, c);
    t(r, x.param_dim) = s.point[r];
  }
  return t;
}

// Covectors annihilating the tangent space, with the tangent rank.
template <class F>
std::pair<Matrix<typename F::Elem>, std::size_t> tangent_annihilator(const F& f, const QMatrix& gens) {
  auto t = linalg::transpose(linalg::convert(f, gens));
  auto r = linalg::rref(f, t);
  return {linalg::kernel_from_rref(f, r.reduced, r.pivots, gens.rows()), r.rank()};
}

}  // namespace

linalg::Subspace tangent_space(const zoo::ParamVariety& x, const zoo::Sample& s) {
  auto gens = linalg::transpose(tangent_generators(x, s));
  return linalg::Subspace::from_rows(RationalField{}, gens);
}

template <class F>
BasicAutAlgebra<F> aut_from_samples(const F& field, const zoo::ParamVariety& x, const AutConfig& cfg) {
  using E = typename F::Elem;
  const std::size_t n = x.ambient_dim, cols = n * n;
  // Over Q the dimension is tracked mod p and the rows are kept for the end.
  using TrackField = std::conditional_t<kRational<F>, PrimeField, F>;
  TrackField tf = [&] {
    if constexpr (kRational<F>) return PrimeField(linalg::kPrime1);
    else return field;
  }();
  linalg::RowEchelon<TrackField> tracker(tf, cols);
  linalg::QSystem rational_rows(cols);

  BasicAutAlgebra<F> out;
  out.n = n;
  out.provenance = Provenance::kSamples;
  Rng rng(cfg.seed);
  std::size_t drawn = 0, unchanged = 0, dim = cols;
  while (unchanged < cfg.window + cfg.holdout) {
    if (drawn++ >= cfg.max_samples)
      throw NonStabilizing(x.name + ": dimension did not stabilize within " + std::to_string(cfg.max_samples) +
                           " samples");
    auto s = zoo::sample_point(x, rng);
    auto gens = tangent_generators(x, s);
    std::vector<std::vector<typename TrackField::Elem>> rows;
    if constexpr (kRational<F>) {
      auto [ann, rk] = tangent_annihilator(field, gens);
      if (rk > x.cone_dim) throw DegenerateParametrization(x.name + ": tangent rank exceeds the cone dimension");
      if (rk < x.cone_dim) continue;  // non-generic point
      for (std::size_t a = 0; a < ann.rows(); ++a) {
        QVector cov = primitive(ann.row(a));
        linalg::QSystem::Row row;
        std::vector<typename TrackField::Elem> mod(cols, 0);
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(cov[k]) == 0) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (sgn(s.point[j]) == 0) continue;
            Rat v = cov[k] * s.point[j];
            mod[k * n + j] = tf.from_rat(v);
            row.emplace_back(k * n + j, std::move(v));
          }
        }
        rational_rows.add_row(std::move(row));
        rows.push_back(std::move(mod));
      }
    } else {
      auto [ann, rk] = tangent_annihilator(field, gens);
      if (rk > x.cone_dim) throw DegenerateParametrization(x.name + ": tangent rank exceeds the cone dimension");
      if (rk < x.cone_dim) continue;
      auto p = linalg::convert(field, std::span<const Rat>(s.point));
      for (std::size_t a = 0; a < ann.rows(); ++a) {
        std::vector<E> row(cols, field.zero());
        for (std::size_t k = 0; k < n; ++k) {
          if (field.is_zero(ann(a, k))) continue;
          for (std::size_t j = 0; j < n; ++j) row[k * n + j] = field.mul(ann(a, k), p[j]);
        }
        rows.push_back(std::move(row));
      }
    }
    for (auto& r : rows) tracker.insert(std::move(r));
    std::size_t next = cols - tracker.rank();
    unchanged = next == dim ? unchanged + 1 : 0;
    dim = next;
    out.dim_trace.push_back(dim);
  }
  out.samples = out.dim_trace.size();
  if constexpr (kRational<F>) {
    out.basis = linalg::certified_kernel(rational_rows).kernel;
  } else {
    out.basis = linalg::BasicSubspace<F>::from_rows(field, tracker.kernel());
  }
  return out;
}

AutAlgebra aut_from_samples(const zoo::ParamVariety& x, const AutConfig& cfg) {
  return aut_from_samples(RationalField{}, x, cfg);
}

template <class F>
BasicAutAlgebra<F> aut_from_quadrics(const F& field, const zoo::ParamVariety& x) {
  if (x.quadrics.empty()) throw NoIdeal(x.name + " carries no quadrics");
  const std::size_t n = x.ambient_dim, ns = n * (n + 1) / 2;
  std::vector<QMatrix> grams;
  std::vector<QVector> sym_coords;
  for (const auto& q : x.quadrics) {
    grams.push_back(zoo::gram_matrix(q));
    QVector v;
    v.reserve(ns);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) v.push_back(grams.back()(k, l));
    sym_coords.push_back(std::move(v));
  }
  auto ann = linalg::span_q(ns, sym_coords).annihilator();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) pairs.emplace_back(k, l);

  linalg::SparseSystem<typename F::Elem> sys(n * n);
  QVector dense(n * n);
  for (const auto& s : grams) {
    for (std::size_t a = 0; a < ann.dim(); ++a) {
      for (auto& v : dense) v = 0;
      auto cov = ann.basis().row(a);
      for (std::size_t idx = 0; idx < ns; ++idx) {
        const Rat& w = cov[idx];
        if (sgn(w) == 0) continue;
        auto [k, l] = pairs[idx];
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(s(m, l)) != 0) dense[m * n + k] += w * s(m, l);  // (g^T S)_{kl}
          if (sgn(s(k, m)) != 0) dense[m * n + l] += w * s(k, m);  // (S g)_{kl}
        }
      }
      typename linalg::SparseSystem<typename F::Elem>::Row row;
      for (std::size_t c = 0; c < n * n; ++c)
        if (sgn(dense[c]) != 0) row.emplace_back(c, field.from_rat(dense[c]));
      if (!row.empty()) sys.add_row(std::move(row));
    }
  }
  BasicAutAlgebra<F> out;
  out.n = n;
  out.provenance = Provenance::kQuadrics;
  if constexpr (kRational<F>) out.basis = linalg::certified_kernel(sys).kernel;
  else out.basis = linalg::kernel_of(field, sys);
  return out;
}

AutAlgebra aut_from_quadrics(const zoo::ParamVariety& x) { return aut_from_quadrics(RationalField{}, x); }

template <class F>
bool is_bracket_closed(const BasicAutAlgebra<F>& g) {
  const auto& f = g.basis.field();
  std::vector<Matrix<typename F::Elem>> mats;
  for (std::size_t i = 0; i < g.dim(); ++i) mats.push_back(g.element(i));
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      auto ab = linalg::multiply(f, mats[i], mats[j]);
      auto ba = linalg::multiply(f, mats[j], mats[i]);
      std::vector<typename F::Elem> c(ab.data().size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.sub(ab.data()[k], ba.data()[k]);
      if (!g.basis.contains(c)) return false;
    }
  return true;
}

template struct BasicAutAlgebra<RationalField>;
template struct BasicAutAlgebra<PrimeField>;
template BasicAutAlgebra<PrimeField> aut_from_samples(const PrimeField&, const zoo::ParamVariety&, const AutConfig&);
template BasicAutAlgebra<RationalField> aut_from_samples(const RationalField&, const zoo::ParamVariety&,
                                                         const AutConfig&);
template BasicAutAlgebra<PrimeField> aut_from_quadrics(const PrimeField&, const zoo::ParamVariety&);
template BasicAutAlgebra<RationalField> aut_from_quadrics(const RationalField&, const zoo::ParamVariety&);
template bool is_bracket_closed(const BasicAutAlgebra<PrimeField>&);
template bool is_bracket_closed(const BasicAutAlgebra<RationalField>&);

}  // namespace tube::aut
