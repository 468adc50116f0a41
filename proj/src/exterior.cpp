#include "lgbridge/exterior.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "lgbridge/links_gould.hpp"

namespace lgbridge {

ExteriorIndex::ExteriorIndex(int strands) : strands_(strands) {
  if (strands < 0 || strands > kMaxExteriorStrands)
    throw std::invalid_argument("exterior index: unsupported strand count " + std::to_string(strands));
}

int ExteriorIndex::degree() const {
  int d = 0;
  for (auto m : masks_) d += std::popcount(m);
  return d;
}

int ExteriorIndex::count(int slot, int lo, int hi) const {
  if (lo > hi) return 0;
  std::uint32_t window = 0;
  for (int k = std::max(lo, 1); k <= std::min(hi, strands_); ++k) window |= 1u << (k - 1);
  return std::popcount(mask(slot) & window);
}

std::optional<int> ExteriorIndex::wedge_right(int slot, int position) {
  if (slot < 0 || slot >= kMaxSlots || position < 1 || position > strands_)
    throw std::out_of_range("wedge_right: generator out of range");
  auto& m = masks_[static_cast<std::size_t>(slot)];
  const std::uint32_t bit = 1u << (position - 1);
  if (m & bit) return std::nullopt;
  // Moving the new generator left past every larger one.
  int passed = std::popcount(m >> position);
  for (int s = slot + 1; s < kMaxSlots; ++s) passed += std::popcount(masks_[static_cast<std::size_t>(s)]);
  m |= bit;
  return passed % 2 == 0 ? 1 : -1;
}

std::optional<SignedIndex> reord(int strands, const std::vector<Generator>& generators) {
  SignedIndex out{1, ExteriorIndex(strands)};
  for (const auto& g : generators) {
    auto s = out.index.wedge_right(g.slot, g.position);
    if (!s) return std::nullopt;
    out.sign *= *s;
  }
  return out;
}

ExteriorVector ExteriorVector::basis(const ExteriorIndex& idx, const LaurentHalf& coef) {
  return from_entries({{idx, coef}});
}

ExteriorVector ExteriorVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  ExteriorVector v;
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      if (!v.entries_.empty() && v.entries_.back().second.is_zero()) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().second.is_zero()) v.entries_.pop_back();
  return v;
}

LaurentHalf ExteriorVector::coefficient(const ExteriorIndex& idx) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const Entry& e, const ExteriorIndex& i) { return e.first < i; });
  if (it != entries_.end() && it->first == idx) return it->second;
  return {};
}

namespace {

using SparseColumn = std::vector<std::pair<int, LaurentHalf>>;

std::vector<std::vector<SparseColumn>> sparse_columns(const std::vector<PolyMatrix>& summands) {
  std::vector<std::vector<SparseColumn>> out;
  for (const auto& m : summands) {
    std::vector<SparseColumn> cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) cols[c].emplace_back(static_cast<int>(r) + 1, m(r, c));
    out.push_back(std::move(cols));
  }
  return out;
}

ExteriorVector apply_columns(const std::vector<std::vector<SparseColumn>>& cols, const ExteriorVector& v) {
  std::vector<ExteriorVector::Entry> out;
  for (const auto& [idx, coef] : v.entries()) {
    const int n = idx.strands();
    std::vector<ExteriorVector::Entry> partial{{ExteriorIndex(n), coef}};
    for (int slot = 0; slot < kMaxSlots; ++slot) {
      if (idx.mask(slot) == 0) continue;
      if (slot >= static_cast<int>(cols.size()))
        throw std::invalid_argument("exterior_apply: no matrix for an occupied slot");
      for (int pos = 1; pos <= n; ++pos) {
        if (!idx.contains(slot, pos)) continue;
        const auto& column = cols[static_cast<std::size_t>(slot)][static_cast<std::size_t>(pos - 1)];
        std::vector<ExteriorVector::Entry> next;
        for (const auto& [pidx, pcoef] : partial)
          for (const auto& [row, x] : column) {
            ExteriorIndex grown = pidx;
            if (auto s = grown.wedge_right(slot, row)) next.emplace_back(grown, *s > 0 ? pcoef * x : -(pcoef * x));
          }
        partial = ExteriorVector::from_entries(std::move(next)).entries();
        if (partial.empty()) break;
      }
      if (partial.empty()) break;
    }
    for (auto& e : partial) out.push_back(std::move(e));
  }
  return ExteriorVector::from_entries(std::move(out));
}

}  // namespace

ExteriorVector exterior_apply(const std::vector<PolyMatrix>& summands, const ExteriorVector& v) {
  for (const auto& m : summands)
    if (m.rows() != m.cols()) throw std::invalid_argument("exterior_apply: summand matrix not square");
  return apply_columns(sparse_columns(summands), v);
}

ExteriorVector exterior_apply_word(const ExteriorRep& rep, const BraidWord& b, const ExteriorVector& v) {
  const int n = b.strands();
  std::map<std::pair<int, int>, std::vector<std::vector<SparseColumn>>> cache;
  auto generator = [&](const Letter& l) -> const std::vector<std::vector<SparseColumn>>& {
    auto [it, fresh] = cache.try_emplace({l.index, l.sign});
    if (fresh) {
      std::vector<PolyMatrix> mats;
      for (auto variant : rep)
        mats.push_back(l.sign > 0 ? burau_generator(n, l.index, variant)
                                  : burau_generator_inverse(n, l.index, variant));
      it->second = sparse_columns(mats);
    }
    return it->second;
  };
  ExteriorVector out = v;
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = apply_columns(generator(*it), out);
  return out;
}

std::vector<ExteriorIndex> exterior_basis(int strands, int slots) {
  if (slots < 1 || slots > kMaxSlots) throw std::invalid_argument("exterior_basis: bad slot count");
  const std::uint64_t total = std::uint64_t{1} << (strands * slots);
  std::vector<ExteriorIndex> out;
  out.reserve(total);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ExteriorIndex idx(strands);
    for (int s = 0; s < slots; ++s)
      for (int k = 1; k <= strands; ++k)
        if ((bits >> (s * strands + k - 1)) & 1u) idx.wedge_right(s, k);
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Generators attached to one tensor site, in slot order.
std::vector<int> site_slots(IntertwinerKind kind, int digit) {
  switch (kind) {
    case IntertwinerKind::kI21: {
      static const std::vector<int> table[4] = {{1}, {}, {0, 1}, {0}};
      return table[digit];
    }
    case IntertwinerKind::kI31: {
      static const std::vector<int> table[8] = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
      return table[digit];
    }
    case IntertwinerKind::kJ:
      return digit == 1 ? std::vector<int>{0} : std::vector<int>{};
    case IntertwinerKind::kK:
      return digit == 0 ? std::vector<int>{0} : std::vector<int>{};
  }
  throw std::invalid_argument("unknown intertwiner");
}

}  // namespace

Intertwiner::Intertwiner(IntertwinerKind kind, int strands, bool keep_reord_signs)
    : kind_(kind), strands_(strands) {
  if (strands < 1) throw std::invalid_argument("intertwiner needs at least one strand");
  const int d = site_dim();
  const BasisCode total = basis_size(d, strands);
  if (total > (BasisCode{1} << 24)) throw std::length_error("intertwiner: basis too large");
  forward_.reserve(total);
  for (BasisCode code = 0; code < total; ++code) {
    const auto digits = decode_basis(code, d, strands);
    std::vector<Generator> gens;
    if (kind == IntertwinerKind::kI31) {
      // Position p carries the generators of site n+1-p; positions are
      // wedged on in increasing order.
      for (int p = 1; p <= strands; ++p)
        for (int slot : site_slots(kind, digits[static_cast<std::size_t>(strands - p)]))
          gens.push_back({slot, p});
    } else {
      for (int slot = 0; slot < slots(); ++slot)
        for (int k = 1; k <= strands; ++k)
          for (int s : site_slots(kind, digits[static_cast<std::size_t>(k - 1)]))
            if (s == slot) gens.push_back({slot, k});
    }
    auto img = reord(strands, gens);
    if (!img) throw std::logic_error("intertwiner: repeated generator");
    if (kind == IntertwinerKind::kI31 && !keep_reord_signs) img->sign = 1;
    forward_.push_back(*img);
  }
  backward_.reserve(total);
  for (BasisCode code = 0; code < total; ++code) backward_.emplace_back(forward_[code].index, code);
  std::sort(backward_.begin(), backward_.end());
}

int Intertwiner::site_dim() const {
  switch (kind_) {
    case IntertwinerKind::kI21: return 4;
    case IntertwinerKind::kI31: return 8;
    default: return 2;
  }
}

int Intertwiner::slots() const {
  switch (kind_) {
    case IntertwinerKind::kI21: return 2;
    case IntertwinerKind::kI31: return 3;
    default: return 1;
  }
}

ExteriorRep Intertwiner::exterior_rep() const {
  switch (kind_) {
    case IntertwinerKind::kI21: return {BurauVariant::kF21, BurauVariant::kG21};
    case IntertwinerKind::kI31: return {BurauVariant::kFGH31, BurauVariant::kFGH31, BurauVariant::kFGH31};
    case IntertwinerKind::kJ: return {BurauVariant::kStandard};
    case IntertwinerKind::kK: return {BurauVariant::kG21};
  }
  throw std::invalid_argument("unknown intertwiner");
}

std::optional<BasisCode> Intertwiner::preimage(const ExteriorIndex& idx) const {
  auto it = std::lower_bound(backward_.begin(), backward_.end(), idx,
                             [](const auto& e, const ExteriorIndex& i) { return e.first < i; });
  if (it != backward_.end() && it->first == idx) return it->second;
  return std::nullopt;
}

bool Intertwiner::is_bijection() const {
  if (backward_.size() != (std::size_t{1} << (strands_ * slots()))) return false;
  for (std::size_t k = 1; k < backward_.size(); ++k)
    if (backward_[k - 1].first == backward_[k].first) return false;
  return true;
}

ExteriorVector Intertwiner::map(const SparseVector<LaurentHalf>& v) const {
  if (v.site_dim() != site_dim() || v.sites() != strands_)
    throw std::invalid_argument("intertwiner: vector shape mismatch");
  std::vector<ExteriorVector::Entry> out;
  out.reserve(v.entries().size());
  for (const auto& [code, coef] : v.entries()) {
    const auto& img = forward_[code];
    out.emplace_back(img.index, img.sign > 0 ? coef : -coef);
  }
  return ExteriorVector::from_entries(std::move(out));
}

const LocalOperator<LaurentHalf>& tensor_operator_for(IntertwinerKind kind) {
  switch (kind) {
    case IntertwinerKind::kI21: return r_lg21_special();
    case IntertwinerKind::kI31: return s_lg31();
    case IntertwinerKind::kJ: return r_small(SmallR::kR1);
    case IntertwinerKind::kK: return r_small(SmallR::kR3);
  }
  throw std::invalid_argument("unknown intertwiner");
}

std::optional<BasisCode> intertwining_violation(const Intertwiner& map, const LocalOperator<LaurentHalf>& op,
                                                const BraidWord& word) {
  if (word.strands() != map.strands()) throw std::invalid_argument("intertwining check: strand mismatch");
  if (op.site_dim() != map.site_dim()) throw std::invalid_argument("intertwining check: site dimension mismatch");
  const BraidWord tensor_word = map.kind() == IntertwinerKind::kI31 ? hat(word) : word;
  const auto rep = map.exterior_rep();
  const int d = map.site_dim();
  const int n = map.strands();
  const BasisCode total = basis_size(d, n);
  for (BasisCode code = 0; code < total; ++code) {
    const auto& img = map.image(code);
    const auto lhs = exterior_apply_word(rep, word, ExteriorVector::basis(img.index, LaurentHalf(img.sign)));
    const auto rhs = map.map(apply_word(tensor_word, op, SparseVector<LaurentHalf>::basis(d, n, code)));
    if (!(lhs == rhs)) return code;
  }
  return std::nullopt;
}

PolyMatrix j_n_matrix(int strands) {
  if (strands < 2) throw std::invalid_argument("j_n_matrix needs at least two strands");
  const auto n = static_cast<std::size_t>(strands);
  PolyMatrix m(n, n);
  // Border k = 2..n around the previous block.
  for (int size = 2; size <= strands; ++size) {
    const auto last = static_cast<std::size_t>(size - 1);
    for (int k = 1; k < size; ++k) {
      const auto pos = static_cast<std::size_t>(k - 1);
      m(pos, last) = t_pow(size - 1 - k, Rational(k % 2 == 1 ? 1 : -1));
      m(last, pos) = t_pow(-(size - 1 - k), Rational(size % 2 == 1 ? 1 : -1));
    }
  }
  return m;
}

LaurentHalf diagonal_weight(DiagonalWeight kind, const ExteriorIndex& idx) {
  const int n = idx.strands();
  auto sign = [](int exponent) { return exponent % 2 == 0 ? 1 : -1; };
  switch (kind) {
    case DiagonalWeight::kMuTilde21:
      return t_pow(-2 * (n - 1), Rational(sign((n - 1) + idx.count(0, 2, n) + idx.count(1, 2, n))));
    case DiagonalWeight::kMu1:
      return LaurentHalf(sign(idx.count(0, 2, n)));
    case DiagonalWeight::kNu:
      // Single-summand algebra: the G generators sit in slot 0.
      return LaurentHalf(sign((n - 1) + idx.count(0, 2, n)));
    case DiagonalWeight::kMuTilde31:
      return t_pow(3 * (n - 1),
                   Rational(sign(idx.count(0, 1, n - 1) + idx.count(1, 1, n - 1) + idx.count(2, 1, n - 1))));
  }
  throw std::invalid_argument("unknown diagonal weight");
}

LaurentHalf exterior_trace(const ExteriorRep& rep, const BraidWord& b, DiagonalWeight weight) {
  const auto basis = exterior_basis(b.strands(), static_cast<int>(rep.size()));
  return parallel_reduce(
      basis.size(), LaurentHalf(),
      [&](std::size_t i, LaurentHalf& acc) {
        const auto image = exterior_apply_word(rep, b, ExteriorVector::basis(basis[i]));
        const LaurentHalf c = image.coefficient(basis[i]);
        if (!c.is_zero()) acc += c * diagonal_weight(weight, basis[i]);
      },
      [](LaurentHalf& total, const LaurentHalf& part) { total += part; });
}

LaurentHalf exterior_factor(const BraidWord& b, BurauVariant variant, int lo, int hi) {
  const std::vector<PolyMatrix> mats{burau_matrix(b, variant)};
  LaurentHalf sum;
  for (const auto& idx : exterior_basis(b.strands(), 1)) {
    const LaurentHalf c = exterior_apply(mats, ExteriorVector::basis(idx)).coefficient(idx);
    if (c.is_zero()) continue;
    sum += idx.count(0, lo, hi) % 2 == 0 ? c : -c;
  }
  return sum;
}

LaurentHalf lg_product(const BraidWord& b, ProductFlavor flavor) {
  const int n = b.strands();
  if (flavor == ProductFlavor::kLg21) {
    const LaurentHalf prefactor = t_pow(-2 * (n - 1), Rational((n - 1) % 2 == 0 ? 1 : -1, 4));
    return prefactor * exterior_factor(b, BurauVariant::kF21, 2, n) * exterior_factor(b, BurauVariant::kG21, 2, n);
  }
  // The three summands carry the same representation, evaluated on hat(b).
  const BraidWord bh = hat(b);
  const LaurentHalf prefactor = t_pow(3 * (n - 1), Rational(1, 8));
  const LaurentHalf f = exterior_factor(bh, BurauVariant::kFGH31, 1, n - 1);
  return prefactor * f * f * f;
}

LaurentHalf alexander_exterior(const BraidWord& b, AlexanderPath path) {
  const LaurentHalf trace = path == AlexanderPath::kViaPsiMu1
                                ? exterior_trace({BurauVariant::kStandard}, b, DiagonalWeight::kMu1)
                                : exterior_trace({BurauVariant::kG21}, b, DiagonalWeight::kNu);
  return trace.scaled(Rational(1, 2));
}

}  // namespace lgbridge
