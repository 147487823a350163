#include "niho/symfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace niho {

namespace detail {
extern const std::string_view kShippedTable;
}

namespace {

using Key = MultiPoly2::Key;

// Keeps keys that occur an odd number of times.
std::vector<Key> cancel_pairs(std::vector<Key> v) {
  std::sort(v.begin(), v.end());
  std::vector<Key> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) & 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

std::vector<Key> xor_merge(const std::vector<Key>& a, const std::vector<Key>& b) {
  std::vector<Key> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint32_t shift_of(std::uint32_t nvars, std::uint32_t i) { return 8 * (nvars - 1 - i); }

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Number of distinct permutations of a sorted exponent vector.
std::uint64_t orbit_size(const std::vector<std::uint32_t>& sorted) {
  std::uint64_t denom = 1;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    denom *= factorial(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return factorial(static_cast<std::uint32_t>(sorted.size())) / denom;
}

// Monomial-symmetric basis: a set of partitions (descending exponent keys).
class MBasis {
 public:
  explicit MBasis(std::uint32_t nvars) : shape_(nvars) {
    for (std::uint32_t k = 0; k <= nvars; ++k) {
      std::vector<std::uint32_t> masks;
      for (std::uint32_t m = 0; m < (1u << nvars); ++m) {
        if (static_cast<std::uint32_t>(__builtin_popcount(m)) == k) masks.push_back(m);
      }
      subsets_.push_back(std::move(masks));
    }
  }

  // m-expansion of (sum over set) * sigma_k.
  std::vector<Key> times_sigma(const std::vector<Key>& set, std::uint32_t k) const {
    const std::uint32_t n = shape_.nvars();
    std::unordered_set<Key> out;
    std::vector<std::pair<Key, std::uint64_t>> local;
    for (const Key nu : set) {
      const auto e = shape_.unpack(nu);
      const std::uint64_t on = orbit_size(e);
      local.clear();
      for (const auto mask : subsets_[k]) {
        auto b = e;
        for (std::uint32_t i = 0; i < n; ++i) b[i] += (mask >> i) & 1;
        std::sort(b.begin(), b.end(), std::greater<>());
        const Key mu = shape_.pack(b);
        auto it = std::find_if(local.begin(), local.end(), [&](const auto& p) { return p.first == mu; });
        if (it == local.end()) {
          local.emplace_back(mu, 1);
        } else {
          ++it->second;
        }
      }
      for (const auto& [mu, cnt] : local) {
        const std::uint64_t om = orbit_size(shape_.unpack(mu));
        const std::uint64_t coeff = on * cnt / om;
        if (coeff & 1) {
          if (!out.erase(mu)) out.insert(mu);
        }
      }
    }
    std::vector<Key> v(out.begin(), out.end());
    std::sort(v.begin(), v.end());
    return v;
  }

  const MultiPoly2& shape() const { return shape_; }

 private:
  MultiPoly2 shape_;
  std::vector<std::vector<std::uint32_t>> subsets_;
};

// Memoized m-expansions of sigma^e, built by appending factors from sigma_n down.
class SigmaPowers {
 public:
  explicit SigmaPowers(const MBasis& basis) : basis_(basis) {}

  const std::vector<Key>& get(const std::vector<std::uint32_t>& e) {
    const std::uint32_t n = basis_.shape().nvars();
    std::vector<std::uint32_t> prefix(n, 0);
    const std::vector<Key>* cur = &root();
    for (std::uint32_t k = n; k-- > 0;) {
      for (std::uint32_t r = 0; r < e[k]; ++r) {
        ++prefix[k];
        const Key id = encode(prefix);
        auto it = memo_.find(id);
        if (it == memo_.end()) it = memo_.emplace(id, basis_.times_sigma(*cur, k + 1)).first;
        cur = &it->second;
      }
    }
    return *cur;
  }

 private:
  const std::vector<Key>& root() {
    if (root_.empty()) root_.push_back(0);
    return root_;
  }
  static Key encode(const std::vector<std::uint32_t>& e) {
    Key k = 0;
    for (auto v : e) k = k * 64 + v;
    return k;
  }

  const MBasis& basis_;
  std::vector<Key> root_;
  std::unordered_map<Key, std::vector<Key>> memo_;
};

bool is_partition(const std::vector<std::uint32_t>& e) { return std::is_sorted(e.rbegin(), e.rend()); }

std::vector<std::vector<std::uint32_t>> index_vectors(std::uint32_t nvars, std::uint32_t weighted,
                                                      std::uint32_t max_factors) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(nvars, 0);
  auto rec = [&](auto&& self, std::uint32_t k, std::uint32_t left, std::uint32_t factors) -> void {
    if (k == nvars) {
      if (left == 0) out.push_back(e);
      return;
    }
    const std::uint32_t w = k + 1;
    for (std::uint32_t c = 0; c * w <= left && factors + c <= max_factors; ++c) {
      e[k] = c;
      self(self, k + 1, left - c * w, factors + c);
    }
    e[k] = 0;
  };
  rec(rec, 0, weighted, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Value> sigmas_of(const Field& f, const std::vector<Value>& r) {
  // coefficients of prod (x + r_i); sigma_k is the coefficient of x^{n-k}.
  std::vector<Value> poly{1};
  for (auto v : r) {
    std::vector<Value> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly[i]);
      next[i] = f.add(next[i], f.mul(poly[i], v));
    }
    poly = std::move(next);
  }
  const std::size_t n = r.size();
  std::vector<Value> sigma(n);
  for (std::size_t k = 1; k <= n; ++k) sigma[k - 1] = poly[n - k];
  return sigma;
}

}  // namespace

MultiPoly2::MultiPoly2(std::uint32_t nvars) : nvars_(nvars) {
  if (nvars == 0 || nvars > 8) throw std::invalid_argument("MultiPoly2 supports 1..8 variables");
}

MultiPoly2 MultiPoly2::variable(std::uint32_t nvars, std::uint32_t i) {
  MultiPoly2 p(nvars);
  p.keys_.push_back(Key{1} << shift_of(nvars, i));
  return p;
}

MultiPoly2 MultiPoly2::one(std::uint32_t nvars) {
  MultiPoly2 p(nvars);
  p.keys_.push_back(0);
  return p;
}

MultiPoly2 MultiPoly2::from_keys(std::uint32_t nvars, std::vector<Key> keys) {
  MultiPoly2 p(nvars);
  p.keys_ = cancel_pairs(std::move(keys));
  return p;
}

MultiPoly2::Key MultiPoly2::pack(const std::vector<std::uint32_t>& exps) const {
  Key k = 0;
  for (std::uint32_t i = 0; i < nvars_; ++i) {
    if (exps[i] > 255) throw std::overflow_error("exponent exceeds 255");
    k |= Key{exps[i]} << shift_of(nvars_, i);
  }
  return k;
}

std::vector<std::uint32_t> MultiPoly2::unpack(Key k) const {
  std::vector<std::uint32_t> e(nvars_);
  for (std::uint32_t i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint32_t>((k >> shift_of(nvars_, i)) & 0xff);
  return e;
}

std::uint32_t MultiPoly2::total_degree(Key k) const {
  std::uint32_t d = 0;
  for (std::uint32_t i = 0; i < nvars_; ++i) d += (k >> (8 * i)) & 0xff;
  return d;
}

std::uint32_t MultiPoly2::max_var_degree() const {
  std::uint32_t d = 0;
  for (auto k : keys_) {
    for (std::uint32_t i = 0; i < nvars_; ++i) d = std::max<std::uint32_t>(d, (k >> (8 * i)) & 0xff);
  }
  return d;
}

MultiPoly2 MultiPoly2::permuted(const std::vector<std::uint32_t>& perm) const {
  std::vector<Key> out;
  out.reserve(keys_.size());
  for (auto k : keys_) {
    const auto e = unpack(k);
    std::vector<std::uint32_t> f(nvars_);
    for (std::uint32_t i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
    out.push_back(pack(f));
  }
  return from_keys(nvars_, std::move(out));
}

MultiPoly2 MultiPoly2::squared() const {
  if (max_var_degree() > 127) throw std::overflow_error("square would overflow an exponent byte");
  MultiPoly2 p(nvars_);
  p.keys_.reserve(keys_.size());
  for (auto k : keys_) p.keys_.push_back(2 * k);  // (sum m)^2 = sum m^2 over F_2
  return p;
}

MultiPoly2 operator+(const MultiPoly2& a, const MultiPoly2& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly2 p(a.nvars_);
  p.keys_ = xor_merge(a.keys_, b.keys_);
  return p;
}

MultiPoly2 operator*(const MultiPoly2& a, const MultiPoly2& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  if (a.max_var_degree() + b.max_var_degree() > 255) throw std::overflow_error("product exponent exceeds 255");
  const auto& big = a.keys_.size() >= b.keys_.size() ? a.keys_ : b.keys_;
  const auto& small = a.keys_.size() >= b.keys_.size() ? b.keys_ : a.keys_;
  // Each shift of a sorted key list stays sorted; fold the runs pairwise, XOR-merging.
  std::vector<std::vector<Key>> runs;
  runs.reserve(small.size());
  for (auto y : small) {
    std::vector<Key> run(big.size());
    for (std::size_t i = 0; i < big.size(); ++i) run[i] = big[i] + y;
    runs.push_back(std::move(run));
  }
  while (runs.size() > 1) {
    std::vector<std::vector<Key>> next;
    for (std::size_t i = 0; i + 1 < runs.size(); i += 2) {
      std::vector<Key> merged;
      merged.reserve(runs[i].size() + runs[i + 1].size());
      std::set_symmetric_difference(runs[i].begin(), runs[i].end(), runs[i + 1].begin(), runs[i + 1].end(),
                                    std::back_inserter(merged));
      next.push_back(std::move(merged));
    }
    if (runs.size() % 2) next.push_back(std::move(runs.back()));
    runs = std::move(next);
  }
  MultiPoly2 out(a.nvars_);
  if (!runs.empty()) out.keys_ = std::move(runs.front());
  return out;
}

MultiPoly2 elementary(std::uint32_t nvars, std::uint32_t k) {
  MultiPoly2 shape(nvars);
  std::vector<Key> keys;
  for (std::uint32_t m = 0; m < (1u << nvars); ++m) {
    if (static_cast<std::uint32_t>(__builtin_popcount(m)) != k) continue;
    std::vector<std::uint32_t> e(nvars);
    for (std::uint32_t i = 0; i < nvars; ++i) e[i] = (m >> i) & 1;
    keys.push_back(shape.pack(e));
  }
  return MultiPoly2::from_keys(nvars, std::move(keys));
}

MultiPoly2 build_c(std::uint32_t nvars) {
  if (nvars < 2) throw std::invalid_argument("build_c needs at least two variables");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < nvars; ++i) {
    for (std::uint32_t j = i + 1; j < nvars; ++j) pairs.emplace_back(i, j);
  }
  std::vector<MultiPoly2> terms(pairs.size(), MultiPoly2(nvars));
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < count; ++t) {
    const auto [i, j] = pairs[t];
    std::vector<Key> prod{0};
    for (const auto& [k, l] : pairs) {
      if (k == i && l == j) continue;
      const Key uk = Key{1} << shift_of(nvars, k), ul = Key{1} << shift_of(nvars, l);
      std::vector<Key> next;
      next.reserve(2 * prod.size());
      for (auto m : prod) {
        next.push_back(m + uk);
        next.push_back(m + ul);
      }
      prod = cancel_pairs(std::move(next));
    }
    const Key xij = (Key{1} << shift_of(nvars, i)) + (Key{1} << shift_of(nvars, j));
    std::vector<Key> sq;
    sq.reserve(prod.size());
    for (auto m : prod) sq.push_back(2 * m + xij);
    terms[t] = MultiPoly2::from_keys(nvars, std::move(sq));
  }
  MultiPoly2 c(nvars);
  for (const auto& t : terms) c = c + t;
  return c;
}

bool is_symmetric(const MultiPoly2& f) {
  const std::uint32_t n = f.nvars();
  if (n == 1) return true;
  std::vector<std::uint32_t> swap(n), cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  return f.permuted(swap) == f && f.permuted(cycle) == f;
}

ElemExpansion decompose_elementary(const MultiPoly2& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("decompose_elementary: input is not symmetric");
  const std::uint32_t n = f.nvars();
  MBasis basis(n);
  SigmaPowers powers(basis);
  std::vector<Key> rem;
  for (auto k : f.keys()) {
    if (is_partition(f.unpack(k))) rem.push_back(k);
  }
  ElemExpansion out;
  out.nvars = n;
  while (!rem.empty()) {
    const auto lambda = f.unpack(rem.back());
    std::vector<std::uint32_t> e(n);
    for (std::uint32_t k = 0; k < n; ++k) e[k] = lambda[k] - (k + 1 < n ? lambda[k + 1] : 0);
    out.terms.push_back(e);
    rem = xor_merge(rem, powers.get(e));
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

MultiPoly2 expand_elementary(const ElemExpansion& e) {
  const std::uint32_t n = e.nvars;
  std::vector<MultiPoly2> sig;
  for (std::uint32_t k = 1; k <= n; ++k) sig.push_back(elementary(n, k));
  // sigma^e = (sigma^{e/2})^2 * prod_{e_k odd} sigma_k; squaring is free in characteristic 2.
  std::map<std::vector<std::uint32_t>, MultiPoly2> memo;
  std::function<MultiPoly2(const std::vector<std::uint32_t>&, bool)> power =
      [&](const std::vector<std::uint32_t>& ex, bool keep) -> MultiPoly2 {
    if (std::all_of(ex.begin(), ex.end(), [](std::uint32_t v) { return v == 0; })) return MultiPoly2::one(n);
    if (auto it = memo.find(ex); it != memo.end()) return it->second;
    std::vector<std::uint32_t> half(ex.size());
    for (std::size_t k = 0; k < ex.size(); ++k) half[k] = ex[k] / 2;
    MultiPoly2 prod = power(half, true).squared();
    for (std::uint32_t k = 0; k < n; ++k) {
      if (ex[k] % 2) prod = prod * sig[k];
    }
    if (keep) memo.emplace(ex, prod);
    return prod;
  };
  MultiPoly2 sum(n);
  for (const auto& t : e.terms) {
    if (t.size() != n) throw std::invalid_argument("expansion index has the wrong length");
    sum = sum + power(t, false);
  }
  return sum;
}

Value evaluate_c_direct(const Field& f, const std::vector<Value>& r) {
  const std::size_t m = r.size();
  Value c = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Value term = f.mul(r[i], r[j]);
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
          if (k != i || l != j) term = f.mul(term, f.sqr(f.add(r[k], r[l])));
        }
      }
      c = f.add(c, term);
    }
  }
  return c;
}

Value evaluate_expansion(const ElemExpansion& e, const Field& f, const std::vector<Value>& sigma) {
  if (sigma.size() != e.nvars) throw FieldError("sigma vector has the wrong length");
  for (auto s : sigma) {
    if (!f.contains(s)) throw FieldError("sigma value outside " + f.descriptor());
  }
  Value acc = 0;
  for (const auto& t : e.terms) {
    Value term = 1;
    for (std::uint32_t k = 0; k < e.nvars; ++k) term = f.mul(term, f.pow(sigma[k], t[k]));
    acc = f.add(acc, term);
  }
  return acc;
}

ElemExpansion decompose_c_by_evaluation(std::uint32_t nvars, std::uint32_t weighted_degree,
                                        std::uint32_t max_factors, std::uint64_t seed) {
  const auto unknowns = index_vectors(nvars, weighted_degree, max_factors);
  const std::size_t u = unknowns.size();
  const std::size_t words = (u + 1 + 63) / 64;  // last column is the right-hand side
  const FieldPtr f = Field::build(2, 16);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> dist(0, f->order() - 1);

  std::vector<std::vector<std::uint64_t>> basis(u);  // pivot column -> row
  std::size_t rank = 0;
  auto setbit = [](std::vector<std::uint64_t>& row, std::size_t i) { row[i >> 6] ^= std::uint64_t{1} << (i & 63); };
  auto getbit = [](const std::vector<std::uint64_t>& row, std::size_t i) { return (row[i >> 6] >> (i & 63)) & 1; };

  const std::size_t max_points = 4 * u / 16 + 64;
  for (std::size_t pt = 0; pt < max_points && rank < u; ++pt) {
    std::vector<Value> r(nvars);
    for (auto& v : r) v = dist(rng);
    const auto sigma = sigmas_of(*f, r);
    const Value target = evaluate_c_direct(*f, r);
    std::vector<Value> vals(u);
    for (std::size_t c = 0; c < u; ++c) {
      Value t = 1;
      for (std::uint32_t k = 0; k < nvars; ++k) t = f->mul(t, f->pow(sigma[k], unknowns[c][k]));
      vals[c] = t;
    }
    for (std::uint32_t b = 0; b < f->degree(); ++b) {
      std::vector<std::uint64_t> row(words, 0);
      for (std::size_t c = 0; c < u; ++c) {
        if ((vals[c] >> b) & 1) setbit(row, c);
      }
      if ((target >> b) & 1) setbit(row, u);
      bool placed = false;
      for (std::size_t c = 0; c < u && !placed; ++c) {
        if (!getbit(row, c)) continue;
        if (basis[c].empty()) {
          basis[c] = row;
          ++rank;
          placed = true;
        } else {
          for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[c][w];
        }
      }
      if (!placed && getbit(row, u)) throw std::runtime_error("evaluation system is inconsistent");
    }
  }
  if (rank < u) throw std::runtime_error("evaluation system did not reach full rank");
  // Back substitution.
  std::vector<std::uint8_t> sol(u, 0);
  for (std::size_t c = u; c-- > 0;) {
    std::uint64_t v = getbit(basis[c], u);
    for (std::size_t d = c + 1; d < u; ++d) {
      if (getbit(basis[c], d) && sol[d]) v ^= 1;
    }
    sol[c] = static_cast<std::uint8_t>(v);
  }
  ElemExpansion out;
  out.nvars = nvars;
  for (std::size_t c = 0; c < u; ++c) {
    if (sol[c]) out.terms.push_back(unknowns[c]);
  }
  return out;
}

std::string_view shipped_table_csv() { return detail::kShippedTable; }

ElemExpansion parse_table_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  ElemExpansion out;
  out.nvars = 7;
  if (!std::getline(in, line) || line.rfind("term_no,e1", 0) != 0) {
    throw std::invalid_argument("table: missing header term_no,e1,...,e7");
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::uint32_t> fields;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        fields.push_back(static_cast<std::uint32_t>(std::stoul(cell)));
      } catch (const std::exception&) {
        throw std::invalid_argument("table line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    if (fields.size() != 8) throw std::invalid_argument("table line " + std::to_string(lineno) + ": expected 8 columns");
    out.terms.emplace_back(fields.begin() + 1, fields.end());
  }
  return out;
}

std::string table_csv(const ElemExpansion& e) {
  auto terms = e.terms;
  std::sort(terms.begin(), terms.end());
  std::ostringstream os;
  os << "term_no";
  for (std::uint32_t k = 1; k <= e.nvars; ++k) os << ",e" << k;
  os << '\n';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    os << i + 1;
    for (auto v : terms[i]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

AppendixDiff verify_appendix(const ElemExpansion& computed, const ElemExpansion& table) {
  AppendixDiff d;
  d.expected_terms = table.terms.size();
  d.computed_terms = computed.terms.size();
  d.table_sorted = std::is_sorted(table.terms.begin(), table.terms.end()) &&
                   std::adjacent_find(table.terms.begin(), table.terms.end()) == table.terms.end();
  auto a = computed.terms, b = table.terms;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.missing));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.extra));
  for (const auto& t : table.terms) {
    std::uint32_t w = 0;
    for (std::size_t k = 0; k < t.size(); ++k) w += static_cast<std::uint32_t>(k + 1) * t[k];
    if (w != 42) d.weight_violations.push_back(t);
    if (t.size() == 7 && t[0] == 0 && t[1] == 0 && t[4] == 0 && t[5] == 0) d.zero_pattern_violations.push_back(t);
  }
  return d;
}

nlohmann::ordered_json AppendixDiff::to_json() const {
  nlohmann::ordered_json j;
  j["expected_terms"] = expected_terms;
  j["computed_terms"] = computed_terms;
  j["table_sorted"] = table_sorted;
  j["missing"] = missing;
  j["extra"] = extra;
  j["weight_violations"] = weight_violations;
  j["zero_pattern_violations"] = zero_pattern_violations;
  j["diffs"] = missing.size() + extra.size();
  j["ok"] = ok();
  return j;
}

}  // namespace niho
