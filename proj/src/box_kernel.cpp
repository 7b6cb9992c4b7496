#include "box_kernel.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace octet::lattice::detail {

namespace {

constexpr int kBlocks = 3;
using Block = std::array<int, 4>;
using Mat4 = std::array<std::array<int, 4>, 4>;
// 16 lanes, the last four always zero.
using Lanes = int __attribute__((vector_size(64)));

Block mul(const Mat4& m, const Block& v) {
  Block out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  return out;
}

int dot(const Block& a, const Block& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

/// The discriminant group of N in u^3 coordinates, restricted to one block.
/// rows[i] gives the coefficient of generator i (to be halved for doubled
/// input), gens[j] is twice generator j.
struct ClassData {
  std::array<std::array<int, kN>, kGens> rows{}, gens{};
  std::array<std::uint8_t, kGens> dictionary{};
  std::array<std::array<int, kGens>, kGens> rows_on_gens{};  // rows[i] . gens[j]
  std::array<std::uint8_t, kGens> gen_classes{};
  std::array<std::uint8_t, 64> q{};
  std::array<std::array<std::uint8_t, 64>, 64> b{};

  std::uint8_t from_functionals(const std::array<int, kGens>& doubled_values) const {
    std::uint8_t out = 0;
    for (int i = 0; i < kGens; ++i)
      if (((doubled_values[i] / 2) & 1) != 0) out ^= dictionary[i];
    return out;
  }
};

ClassData make_class_data(const BoxKernelInput& in) {
  ClassData c;
  c.rows = in.rows;
  c.gens = in.gens;
  c.dictionary = in.dictionary;
  c.q = in.q;
  c.b = in.b;
  for (int j = 0; j < kGens; ++j) {
    std::array<int, kGens> values{};
    for (int i = 0; i < kGens; ++i) {
      for (int k = 0; k < kN; ++k) c.rows_on_gens[i][j] += c.rows[i][k] * c.gens[j][k];
      values[i] = c.rows_on_gens[i][j];
    }
    c.gen_classes[j] = c.from_functionals(values);
  }
  return c;
}

struct BlockVector {
  Block v, rho_v, rho2_v, gv, g_rho_v;
  int norm, rho_norm, cross;            // v.v, rho v.rho v, v.rho v
  bool delta_even;                      // G (v + rho v) even
  std::array<int, kGens> kv, k_rho_v;   // class functionals on v, rho v
  std::array<int, kGens> gen_v, gen_rho_v;  // 2g . v, 2g . rho v
};

struct BlockData {
  Mat4 gram{}, rho{};
  std::vector<BlockVector> all;
  /// Indices of `all` grouped by norm.
  std::map<int, std::vector<int>> by_norm;
};

using Full = std::array<std::array<int, kN>, kN>;

Mat4 block_of(const Full& m, int b) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m[4 * b + i][4 * b + j];
  return out;
}

int block_dot(const std::array<int, kN>& full, int b, const Block& v) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += full[4 * b + i] * v[i];
  return s;
}

BlockData make_block(const Full& gram, const Full& rho, const ClassData& cls, int b, int bound,
                     bool dual_half) {
  BlockData d;
  d.gram = block_of(gram, b);
  d.rho = block_of(rho, b);
  const int width = 2 * bound + 1;
  int total = 1;
  for (int i = 0; i < 4; ++i) total *= width;
  for (int idx = 0; idx < total; ++idx) {
    BlockVector bv{};
    int rest = idx;
    for (int i = 0; i < 4; ++i) {
      bv.v[i] = rest % width - bound;
      rest /= width;
    }
    bv.gv = mul(d.gram, bv.v);
    // delta / 2 in N* means G delta is even, blockwise.
    if (dual_half && std::any_of(bv.gv.begin(), bv.gv.end(), [](int x) { return x % 2 != 0; })) continue;
    bv.rho_v = mul(d.rho, bv.v);
    bv.rho2_v = mul(d.rho, bv.rho_v);
    bv.g_rho_v = mul(d.gram, bv.rho_v);
    bv.norm = dot(bv.v, bv.gv);
    bv.rho_norm = dot(bv.rho_v, bv.g_rho_v);
    bv.cross = dot(bv.v, bv.g_rho_v);
    bv.delta_even = true;
    for (int i = 0; i < 4; ++i) bv.delta_even = bv.delta_even && (bv.gv[i] + bv.g_rho_v[i]) % 2 == 0;
    for (int i = 0; i < kGens; ++i) {
      bv.kv[i] = block_dot(cls.rows[i], b, bv.v);
      bv.k_rho_v[i] = block_dot(cls.rows[i], b, bv.rho_v);
      bv.gen_v[i] = block_dot(cls.gens[i], b, bv.gv);
      bv.gen_rho_v[i] = block_dot(cls.gens[i], b, bv.g_rho_v);
    }
    d.by_norm[bv.norm].push_back(static_cast<int>(d.all.size()));
    d.all.push_back(bv);
  }
  return d;
}

void put(Lanes& dst, int b, const Block& src) {
  for (int i = 0; i < 4; ++i) dst[4 * b + i] = src[i];
}

bool all_zero(Lanes x) {
  int acc = 0;
  for (int i = 0; i < 16; ++i) acc |= x[i];
  return acc == 0;
}

class RootChecker {
 public:
  RootChecker(const Full& rho, ClassData cls) : cls_(std::move(cls)) {
    for (int j = 0; j < kN; ++j) {
      unit_[j] = Lanes{};
      unit_[j][j] = 1;
      rho_col_[j] = Lanes{};
      for (int i = 0; i < kN; ++i)
        if (rho[i][j] != 0) {
          rho_col_[j][i] = rho[i][j];
          rho_entries_[j].push_back({i, rho_col_[j][i]});
        }
    }
  }

  void check(const BlockVector* const (&parts)[kBlocks], BoxScanReport& rep) const {
    ++rep.roots;
    Lanes r{}, pr{}, ppr{}, gr{}, gpr{};
    int cross = 0, rho_norm = 0, norm = 0;
    bool delta_even = true;
    std::array<int, kGens> kr{}, kpr{}, gen_r{}, gen_pr{};
    for (int b = 0; b < kBlocks; ++b) {
      const BlockVector& p = *parts[b];
      put(r, b, p.v);
      put(pr, b, p.rho_v);
      put(ppr, b, p.rho2_v);
      put(gr, b, p.gv);
      put(gpr, b, p.g_rho_v);
      cross += p.cross;
      norm += p.norm;
      rho_norm += p.rho_norm;
      delta_even = delta_even && p.delta_even;
      for (int i = 0; i < kGens; ++i) {
        kr[i] += p.kv[i];
        kpr[i] += p.k_rho_v[i];
        gen_r[i] += p.gen_v[i];
        gen_pr[i] += p.gen_rho_v[i];
      }
    }
    if (cross == 0) ++rep.rho_orthogonal;
    // (r + rho r)^2 = r^2 + 2 <r, rho r> + (rho r)^2
    if (delta_even && norm + 2 * cross + rho_norm == -4) ++rep.sum_is_minus4;

    // R_{r,-1} e_k = e_k + a r + b rho r against s_r(s_{rho r}(e_k)),
    // a = <e_k, r>, b = <e_k, rho r>.
    Lanes diff{};
    for (int k = 0; k < kN; ++k) {
      const int a = gr[k], b = gpr[k];
      const Lanes lhs = unit_[k] + a * r + b * pr;
      const Lanes y = unit_[k] + b * pr;      // s_{rho r}(e_k)
      const int c = a + b * cross;           // <y, r>
      diff |= lhs ^ (y + c * r);
    }
    if (all_zero(diff)) ++rep.double_reflection;

    // R_{r,i} e_k = e_k + ((a + b) / 2) r + ((b - a) / 2) rho r.
    if (!delta_even) return;
    const Lanes s = (gr + gpr) / 2, t = (gpr - gr) / 2;
    std::array<Lanes, kN> cols;
    for (int k = 0; k < kN; ++k) cols[k] = unit_[k] + s[k] * r + t[k] * pr;
    diff = Lanes{};
    for (int j = 0; j < kN; ++j) {
      Lanes lhs{};  // R (rho e_j)
      for (const auto& [i, v] : rho_entries_[j]) lhs += v * cols[i];
      const Lanes rhs = rho_col_[j] + s[j] * pr + t[j] * ppr;  // rho (R e_j)
      diff |= lhs ^ rhs;
    }
    if (all_zero(diff)) ++rep.commutes_with_rho;

    std::array<int, kGens> delta_values{};
    for (int i = 0; i < kGens; ++i) delta_values[i] = kr[i] + kpr[i];
    const std::uint8_t alpha = cls_.from_functionals(delta_values);
    ++rep.alpha_counts[alpha];
    bool transvection = cls_.q[alpha] == 1;
    for (int j = 0; j < kGens && transvection; ++j) {
      if (gen_r[j] % 2 != 0 || gen_pr[j] % 2 != 0) {
        transvection = false;
        break;
      }
      const int a = gen_r[j] / 2, b = gen_pr[j] / 2;  // <g_j, r>, <g_j, rho r>
      // Twice R_{r,i} g_j = 2 g_j + (a + b) r + (b - a) rho r.
      std::array<int, kGens> image{};
      for (int i = 0; i < kGens; ++i) image[i] = cls_.rows_on_gens[i][j] + (a + b) * kr[i] + (b - a) * kpr[i];
      const std::uint8_t u = cls_.gen_classes[j];
      const std::uint8_t expected = cls_.b[u][alpha] ? u ^ alpha : u;
      transvection = cls_.from_functionals(image) == expected;
    }
    if (transvection) ++rep.transvection;
  }

 private:
  ClassData cls_;
  std::array<Lanes, kN> unit_, rho_col_;
  std::array<std::vector<std::pair<int, int>>, kN> rho_entries_;
};

template <typename F>
void join_by_norm(const std::array<BlockData, kBlocks>& blocks, int target, F&& visit) {
  for (const auto& v1 : blocks[1].all)
    for (const auto& v2 : blocks[2].all) {
      const auto it = blocks[0].by_norm.find(target - v1.norm - v2.norm);
      if (it == blocks[0].by_norm.end()) continue;
      for (int i0 : it->second) visit(blocks[0].all[static_cast<std::size_t>(i0)], v1, v2);
    }
}

}  // namespace

void run_box_kernel(const BoxKernelInput& in, BoxScanReport& rep) {
  const ClassData cls = make_class_data(in);
  std::array<BlockData, kBlocks> blocks;
  for (int b = 0; b < kBlocks; ++b) blocks[b] = make_block(in.gram, in.rho, cls, b, in.bound, false);
  const RootChecker checker(in.rho, cls);
  join_by_norm(blocks, -2, [&](const BlockVector& v0, const BlockVector& v1, const BlockVector& v2) {
    const BlockVector* const parts[kBlocks] = {&v0, &v1, &v2};
    checker.check(parts, rep);
  });

  std::array<BlockData, kBlocks> halves;
  for (int b = 0; b < kBlocks; ++b) halves[b] = make_block(in.gram, in.rho, cls, b, in.bound, true);
  join_by_norm(halves, -4, [&](const BlockVector& v0, const BlockVector& v1, const BlockVector& v2) {
    ++rep.minus4;
    const BlockVector* parts[kBlocks] = {&v0, &v1, &v2};
    int norm = 0;
    for (int b = 0; b < kBlocks; ++b) {
      const auto& p = *parts[b];
      Block rb;
      for (int i = 0; i < 4; ++i) {
        const int twice = p.v[i] - p.rho_v[i];
        if (twice % 2 != 0) return;
        rb[i] = twice / 2;
      }
      const Block rho_rb = mul(halves[b].rho, rb);
      for (int i = 0; i < 4; ++i)
        if (rb[i] + rho_rb[i] != p.v[i]) return;
      norm += dot(rb, mul(halves[b].gram, rb));
    }
    if (norm == -2) ++rep.minus4_from_root;
  });
}

}  // namespace octet::lattice::detail
