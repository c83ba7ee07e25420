#include <map>
#include <type_traits>

#include "tube/aut/aut.hpp"
#include "tube/error.hpp"

namespace tube::aut {

using linalg::Matrix;
using tensors::MultisetIndex;

namespace {

template <class F>
constexpr bool kRational = std::is_same_v<F, RationalField>;

template <class F>
linalg::BasicSubspace<F> solve(const F& field, const linalg::SparseSystem<typename F::Elem>& sys) {
  if constexpr (kRational<F>) return linalg::certified_kernel(sys).kernel;
  else return linalg::kernel_of(field, sys);
}

}  // namespace

template <class F>
BasicProlongation<F> as_prolongation(const BasicAutAlgebra<F>& g) {
  // A degree-1 tensor T(e_j)_l sits at l * n + j, the same slot as g(l, j).
  return {g.n, 0, g.basis};
}

template <class F>
BasicProlongation<F> prolong_next(const F& field, const BasicProlongation<F>& prev) {
  using E = typename F::Elem;
  const std::size_t n = prev.n;
  const int k = prev.order + 1;  // prev holds degree-k tensors
  const std::size_t dp = prev.dim();
  MultisetIndex ms_k(n, k), ms_rest(n, k - 1), ms_next(n, k + 1);
  const std::size_t mk = ms_k.size();

  BasicProlongation<F> out;
  out.n = n;
  out.order = prev.order + 1;
  if (dp == 0) {
    out.tensors = linalg::BasicSubspace<F>(field, n * ms_next.size());
    return out;
  }

  // by_slot[l * mk + s] lists (a, B_a[l, s]) over basis elements a.
  std::vector<std::vector<std::pair<std::size_t, E>>> by_slot(n * mk);
  for (std::size_t a = 0; a < dp; ++a) {
    auto row = prev.tensors.basis().row(a);
    for (std::size_t idx = 0; idx < row.size(); ++idx)
      if (!field.is_zero(row[idx])) by_slot[idx].emplace_back(a, row[idx]);
  }

  // Unknown x_{i,a} at column i * dp + a; slice M_i = sum_a x_{ia} B_a.
  linalg::SparseSystem<E> sys(n * dp);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < ms_rest.size(); ++r) {
        auto with_j = ms_rest.at(r);
        with_j.push_back(static_cast<int>(j));
        auto with_i = ms_rest.at(r);
        with_i.push_back(static_cast<int>(i));
        std::size_t sj = ms_k.index_of(with_j), si = ms_k.index_of(with_i);
        for (std::size_t l = 0; l < n; ++l) {
          const auto& pj = by_slot[l * mk + sj];
          const auto& pi = by_slot[l * mk + si];
          if (pj.empty() && pi.empty()) continue;
          typename linalg::SparseSystem<E>::Row row;
          row.reserve(pj.size() + pi.size());
          for (const auto& [a, v] : pj) row.emplace_back(i * dp + a, v);
          for (const auto& [a, v] : pi) row.emplace_back(j * dp + a, field.neg(v));
          sys.add_row(std::move(row));
        }
      }
  auto ker = solve(field, sys);

  // A[l, S] = M_{S[0]}[l, S minus S[0]].
  Matrix<E> tens(ker.dim(), n * ms_next.size(), field.zero());
  std::vector<std::size_t> first(ms_next.size()), rest(ms_next.size());
  for (std::size_t s = 0; s < ms_next.size(); ++s) {
    const auto& set = ms_next.at(s);
    first[s] = static_cast<std::size_t>(set[0]);
    rest[s] = ms_k.index_of(std::vector<int>(set.begin() + 1, set.end()));
  }
  for (std::size_t t = 0; t < ker.dim(); ++t) {
    auto xv = ker.basis().row(t);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t s = 0; s < ms_next.size(); ++s) {
        E acc = field.zero();
        for (const auto& [a, v] : by_slot[l * mk + rest[s]]) {
          const auto& coef = xv[first[s] * dp + a];
          if (!field.is_zero(coef)) acc = field.add(acc, field.mul(coef, v));
        }
        tens(t, l * ms_next.size() + s) = acc;
      }
  }
  out.tensors = ker.dim() ? linalg::BasicSubspace<F>::from_rows(field, std::move(tens))
                          : linalg::BasicSubspace<F>(field, n * ms_next.size());
  return out;
}

Prolongation prolong(const AutAlgebra& g) { return prolong(RationalField{}, g); }

Prolongation prolong_by_annihilator(const AutAlgebra& g) {
  const std::size_t n = g.n;
  MultisetIndex ms2(n, 2);
  const std::size_t m2 = ms2.size();
  auto ann = g.basis.annihilator();  // covectors on gl(V), index k * n + j
  linalg::QSystem sys(n * m2);
  // Unknown c[k, {i, j}] at k * m2 + idx({i, j}). For each i the slice
  // j -> c[., {i, j}] must be killed by every covector of the annihilator.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < ann.dim(); ++a) {
      auto cov = ann.basis().row(a);
      std::map<std::size_t, Rat> acc;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          const Rat& w = cov[k * n + j];
          if (sgn(w) == 0) continue;
          acc[k * m2 + ms2.index_of({static_cast<int>(i), static_cast<int>(j)})] += w;
        }
      linalg::QSystem::Row row;
      for (auto& [c, v] : acc)
        if (sgn(v) != 0) row.emplace_back(c, v);
      if (!row.empty()) sys.add_row(std::move(row));
    }
  Prolongation out;
  out.n = n;
  out.order = 1;
  out.tensors = linalg::certified_kernel(sys).kernel;
  return out;
}

std::vector<tensors::VValuedSymMap> prolongation_maps(const Prolongation& p) {
  std::vector<tensors::VValuedSymMap> out;
  for (std::size_t i = 0; i < p.dim(); ++i)
    out.push_back(tensors::VValuedSymMap::from_tensor(p.n, p.order + 1, p.n, p.tensors.basis().row(i)));
  return out;
}

namespace {

template <class F>
ProlongRun run_chain(const F& field, const zoo::ParamVariety& x, int kmax, const AutConfig& cfg) {
  ProlongRun run;
  if constexpr (!kRational<F>) run.prime = field.modulus();
  auto g = aut_from_samples(field, x, cfg);
  run.dims.push_back(g.dim());
  auto cur = as_prolongation(g);
  for (int k = 1; k <= kmax; ++k) {
    cur = prolong_next(field, cur);
    run.dims.push_back(cur.dim());
  }
  return run;
}

}  // namespace

ProlongReport prolong_k(const zoo::ParamVariety& x, int kmax, const ProlongConfig& cfg) {
  if (kmax < 0) throw BadDimension("prolong_k: kmax must be non-negative");
  ProlongReport rep;
  rep.runs.push_back(run_chain(PrimeField(cfg.p1), x, kmax, cfg.aut));
  rep.runs.push_back(run_chain(PrimeField(cfg.p2), x, kmax, cfg.aut));
  rep.dims = rep.runs[0].dims;
  bool rational = cfg.certify || x.ambient_dim <= cfg.certify_max_ambient;
  if (rep.runs[0].dims != rep.runs[1].dims) {
    rep.primes_disagreed = true;
    rep.runs.push_back(run_chain(PrimeField(linalg::seeded_prime(cfg.aut.seed)), x, kmax, cfg.aut));
    rational = true;
  }
  if (rational) {
    auto run = run_chain(RationalField{}, x, kmax, cfg.aut);
    rep.dims = run.dims;
    rep.runs.push_back(std::move(run));
    rep.certified_rational = true;
  }
  return rep;
}

bool verify_flow(const tensors::VValuedSymMap& a, const zoo::ParamVariety& x, std::size_t n_samples,
                 std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto s = zoo::sample_point(x, rng);
    if (!tangent_space(x, s).contains(a.diagonal(s.point))) return false;
  }
  return true;
}

template BasicProlongation<RationalField> as_prolongation(const BasicAutAlgebra<RationalField>&);
template BasicProlongation<PrimeField> as_prolongation(const BasicAutAlgebra<PrimeField>&);
template BasicProlongation<RationalField> prolong_next(const RationalField&, const BasicProlongation<RationalField>&);
template BasicProlongation<PrimeField> prolong_next(const PrimeField&, const BasicProlongation<PrimeField>&);

}  // namespace tube::aut
