#include "fqt/unit_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "fqt/bigint.hpp"
#include "fqt/errors.hpp"

namespace fqt {

namespace {

using Row = std::vector<BigInt>;
using Matrix = std::vector<Row>;

// Incrementally reduces relation vectors into an upper-triangular lattice
// basis (rowspace preserved under Euclidean steps).
class LatticeBasis {
 public:
  explicit LatticeBasis(int k) : k_(k), rows_(static_cast<size_t>(k)) {}

  void add(Row v) {
    const auto negate = [](Row& r) {
      for (auto& x : r) x = -x;
    };
    for (int i = 0; i < k_; ++i) {
      if (v[static_cast<size_t>(i)] == 0) continue;
      auto& row = rows_[static_cast<size_t>(i)];
      if (row.empty()) {
        if (v[static_cast<size_t>(i)] < 0) negate(v);
        row = std::move(v);
        return;
      }
      // Euclidean reduction on column i; every step preserves the rowspace
      while (v[static_cast<size_t>(i)] != 0) {
        const BigInt t = v[static_cast<size_t>(i)] / row[static_cast<size_t>(i)];
        if (t != 0)
          for (int j = i; j < k_; ++j) v[static_cast<size_t>(j)] -= t * row[static_cast<size_t>(j)];
        if (v[static_cast<size_t>(i)] != 0) {
          std::swap(v, row);
          if (row[static_cast<size_t>(i)] < 0) negate(row);
        }
      }
    }
  }

  // Full-rank square matrix (throws if the lattice is not finite-index).
  Matrix matrix() const {
    Matrix m;
    for (int i = 0; i < k_; ++i) {
      if (rows_[static_cast<size_t>(i)].empty())
        throw internal_error("unit-group relation lattice is not full rank");
      m.push_back(rows_[static_cast<size_t>(i)]);
    }
    return m;
  }

 private:
  int k_;
  Matrix rows_;
};

// Smith normal form of a square integer matrix.  Only the inverse of the
// column transform is tracked: generators transform by rows of minv.
void smith_normal_form(Matrix& a, Matrix& minv) {
  const int k = static_cast<int>(a.size());
  minv.assign(static_cast<size_t>(k), Row(static_cast<size_t>(k), BigInt(0)));
  for (int i = 0; i < k; ++i) minv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

  auto swap_cols = [&](int x, int y) {
    for (int r = 0; r < k; ++r) std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(x)], a[static_cast<size_t>(r)][static_cast<size_t>(y)]);
    std::swap(minv[static_cast<size_t>(x)], minv[static_cast<size_t>(y)]);
  };
  auto add_col = [&](int dst, int src, const BigInt& lambda) {
    // col_dst += lambda * col_src  =>  row_src of minv -= lambda * row_dst
    for (int r = 0; r < k; ++r)
      a[static_cast<size_t>(r)][static_cast<size_t>(dst)] += lambda * a[static_cast<size_t>(r)][static_cast<size_t>(src)];
    for (int c = 0; c < k; ++c)
      minv[static_cast<size_t>(src)][static_cast<size_t>(c)] -= lambda * minv[static_cast<size_t>(dst)][static_cast<size_t>(c)];
  };
  auto negate_col = [&](int x) {
    for (int r = 0; r < k; ++r) a[static_cast<size_t>(r)][static_cast<size_t>(x)] = -a[static_cast<size_t>(r)][static_cast<size_t>(x)];
    for (auto& v : minv[static_cast<size_t>(x)]) v = -v;
  };
  auto swap_rows = [&](int x, int y) { std::swap(a[static_cast<size_t>(x)], a[static_cast<size_t>(y)]); };
  auto add_row = [&](int dst, int src, const BigInt& lambda) {
    for (int c = 0; c < k; ++c)
      a[static_cast<size_t>(dst)][static_cast<size_t>(c)] += lambda * a[static_cast<size_t>(src)][static_cast<size_t>(c)];
  };

  for (int t = 0; t < k; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing submatrix
      int pr = -1, pc = -1;
      BigInt best = 0;
      for (int r = t; r < k; ++r)
        for (int c = t; c < k; ++c) {
          const BigInt v = abs(a[static_cast<size_t>(r)][static_cast<size_t>(c)]);
          if (v != 0 && (pr < 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) throw internal_error("singular relation matrix in SNF");
      if (pr != t) swap_rows(t, pr);
      if (pc != t) swap_cols(t, pc);
      if (a[static_cast<size_t>(t)][static_cast<size_t>(t)] < 0) negate_col(t);

      bool clean = true;
      const BigInt piv = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
      for (int r = t + 1; r < k; ++r) {
        const BigInt v = a[static_cast<size_t>(r)][static_cast<size_t>(t)];
        if (v == 0) continue;
        add_row(r, t, -(v / piv));
        if (a[static_cast<size_t>(r)][static_cast<size_t>(t)] != 0) clean = false;
      }
      for (int c = t + 1; c < k; ++c) {
        const BigInt v = a[static_cast<size_t>(t)][static_cast<size_t>(c)];
        if (v == 0) continue;
        add_col(c, t, -(v / piv));
        if (a[static_cast<size_t>(t)][static_cast<size_t>(c)] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the whole trailing submatrix
      bool divides = true;
      for (int r = t + 1; r < k && divides; ++r)
        for (int c = t + 1; c < k && divides; ++c)
          if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] % piv != 0) {
            add_col(t, c, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
}

}  // namespace

ModulusCtx ModulusCtx::build(const FieldSpec& F, const MonicPoly& Q, long long phi_budget) {
  if (Q.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
  ModulusCtx ctx;
  ctx.field_ = F;
  ctx.Q_ = Q;

  std::uint64_t residue_count = 1;
  for (int i = 0; i < Q.degree(); ++i) {
    residue_count *= F.q();
    if (residue_count > (1ull << 22)) throw resource_error("q^{deg Q} exceeds the residue budget");
  }

  // distinct irreducible factors of Q
  {
    const int need = std::max(1, (Q.degree() + 1) / 2);
    const IrreducibleTable tbl = build_irreducible_table(F, need);
    for (const auto& [P, e] : factorize(F, Q, tbl).factors) ctx.primes_.push_back(P);
  }

  // units: residues coprime to Q, ascending by code
  const Poly Qp = Q.as_poly();
  for (std::uint64_t code = 0; code < residue_count; ++code) {
    const Poly r = ctx.decode_residue(code);
    if (poly_gcd(F, r, Qp).degree() == 0) ctx.units_.push_back(code);
  }
  ctx.phi_ = static_cast<long long>(ctx.units_.size());
  if (ctx.phi_ > phi_budget) throw resource_error("Phi(Q) exceeds the configured bound");

  // cross-check Phi(Q) = q^{deg Q} prod_{P|Q} (1 - q^{-deg P}), exactly
  {
    BigInt num = pow_big(BigInt(F.q()), static_cast<unsigned>(Q.degree()));
    BigInt den = 1;
    for (const auto& P : ctx.primes_) {
      const BigInt qd = pow_big(BigInt(F.q()), static_cast<unsigned>(P.degree()));
      num *= qd - 1;
      den *= qd;
    }
    if (num / den != ctx.phi_ || num % den != 0)
      throw internal_error("unit count disagrees with the totient product formula");
  }

  // greedy generating set: add units (canonical order) that enlarge the closure
  std::vector<std::uint64_t> gens;
  {
    std::unordered_set<std::uint64_t> closure{ctx.one_code()};
    for (const auto u : ctx.units_) {
      if (closure.count(u)) continue;
      gens.push_back(u);
      std::vector<std::uint64_t> frontier(closure.begin(), closure.end());
      while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (const auto x : frontier) {
          const auto y = ctx.mul_mod(x, u);
          if (closure.insert(y).second) next.push_back(y);
        }
        frontier = std::move(next);
      }
      if (static_cast<long long>(closure.size()) == ctx.phi_) break;
    }
    if (static_cast<long long>(closure.size()) != ctx.phi_)
      throw internal_error("generator closure failed to cover the unit group");
  }

  const int k = static_cast<int>(gens.size());
  std::vector<UnitGroupGen> final_gens;
  if (k > 0) {
    // BFS over the Cayley graph; non-tree edges yield relations generating the
    // kernel of Z^k -> G.
    LatticeBasis basis(k);
    std::unordered_map<std::uint64_t, Row> rep;
    rep.emplace(ctx.one_code(), Row(static_cast<size_t>(k), BigInt(0)));
    std::deque<std::uint64_t> queue{ctx.one_code()};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      const Row rx = rep.at(x);
      for (int i = 0; i < k; ++i) {
        const auto y = ctx.mul_mod(x, gens[static_cast<size_t>(i)]);
        Row ry = rx;
        ry[static_cast<size_t>(i)] += 1;
        auto it = rep.find(y);
        if (it == rep.end()) {
          rep.emplace(y, std::move(ry));
          queue.push_back(y);
        } else {
          Row rel = ry;
          for (int j = 0; j < k; ++j) rel[static_cast<size_t>(j)] -= it->second[static_cast<size_t>(j)];
          bool nonzero = false;
          for (const auto& v : rel) nonzero |= (v != 0);
          if (nonzero) basis.add(std::move(rel));
        }
      }
    }
    if (static_cast<long long>(rep.size()) != ctx.phi_)
      throw internal_error("Cayley BFS did not reach every unit");

    Matrix rel = basis.matrix();
    Matrix minv;
    smith_normal_form(rel, minv);

    // new generators h_j = prod_i g_i^{minv[j][i]}, order = diagonal d_j
    for (int j = 0; j < k; ++j) {
      const BigInt d = rel[static_cast<size_t>(j)][static_cast<size_t>(j)];
      if (d <= 0) throw internal_error("nonpositive invariant factor");
      std::uint64_t h = ctx.one_code();
      for (int i = 0; i < k; ++i) {
        BigInt e = minv[static_cast<size_t>(j)][static_cast<size_t>(i)] % ctx.phi_;
        if (e < 0) e += ctx.phi_;
        h = ctx.mul_mod(h, ctx.pow_mod(gens[static_cast<size_t>(i)], e.convert_to<long long>()));
      }
      const long long order = d.convert_to<long long>();
      if (order == 1) {
        if (h != ctx.one_code()) throw internal_error("trivial invariant factor with nontrivial generator");
        continue;
      }
      final_gens.push_back({h, order});
    }
    // SNF gives ascending divisibility; the spec's chain e_{i+1} | e_i wants descending.
    std::reverse(final_gens.begin(), final_gens.end());
  }
  ctx.gens_ = std::move(final_gens);

  // dlog table by direct-product expansion; also verifies the decomposition.
  ctx.dlog_.clear();
  ctx.dlog_.emplace(ctx.one_code(), std::vector<int>(ctx.gens_.size(), 0));
  for (size_t j = 0; j < ctx.gens_.size(); ++j) {
    std::unordered_map<std::uint64_t, std::vector<int>> expanded;
    std::uint64_t pw = ctx.one_code();
    for (long long a = 0; a < ctx.gens_[j].order; ++a) {
      for (const auto& [code, vec] : ctx.dlog_) {
        auto v = vec;
        v[j] = static_cast<int>(a);
        const auto prod = ctx.mul_mod(code, pw);
        if (!expanded.emplace(prod, std::move(v)).second)
          throw internal_error("unit-group decomposition is not a direct product");
      }
      pw = ctx.mul_mod(pw, ctx.gens_[j].residue);
    }
    ctx.dlog_ = std::move(expanded);
  }
  if (static_cast<long long>(ctx.dlog_.size()) != ctx.phi_)
    throw internal_error("dlog table size disagrees with Phi(Q)");
  return ctx;
}

const std::vector<int>& ModulusCtx::dlog(std::uint64_t code) const {
  const auto it = dlog_.find(code);
  if (it == dlog_.end()) throw std::invalid_argument("residue is not a unit");
  return it->second;
}

Poly ModulusCtx::decode_residue(std::uint64_t code) const {
  Poly r;
  r.c.resize(static_cast<size_t>(Q_.degree()));
  for (int i = 0; i < Q_.degree(); ++i) {
    r.c[static_cast<size_t>(i)] = FieldElem{code % field_.q()};
    code /= field_.q();
  }
  poly_trim(r);
  return r;
}

std::uint64_t ModulusCtx::encode_residue(const Poly& r) const {
  if (r.degree() >= Q_.degree()) throw std::invalid_argument("residue degree too large");
  std::uint64_t code = 0;
  for (int i = Q_.degree() - 1; i >= 0; --i) code = code * field_.q() + r.coeff(i).code;
  return code;
}

std::uint64_t ModulusCtx::residue_of(const Poly& f) const {
  return encode_residue(poly_mod(field_, f, Q_.as_poly()));
}

std::uint64_t ModulusCtx::mul_mod(std::uint64_t a, std::uint64_t b) const {
  return residue_of(poly_mul(field_, decode_residue(a), decode_residue(b)));
}

std::uint64_t ModulusCtx::pow_mod(std::uint64_t a, long long e) const {
  std::uint64_t r = one_code(), b = a;
  while (e) {
    if (e & 1) r = mul_mod(r, b);
    b = mul_mod(b, b);
    e >>= 1;
  }
  return r;
}

bool ModulusCtx::coprime_to_modulus(const MonicPoly& f) const {
  return poly_gcd(field_, f.as_poly(), Q_.as_poly()).degree() == 0;
}

}  // namespace fqt
