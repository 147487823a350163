#include "niho/field.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "field_internal.hpp"
#include "niho/numtheory.hpp"

namespace niho {

namespace detail {

PolyBasis::PolyBasis(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), order_(1), modulus_(std::move(modulus)) {
  place_.resize(n_ + 1);
  for (std::uint32_t i = 0; i <= n_; ++i) {
    place_[i] = order_;
    if (i < n_) order_ *= p_;
  }
  if (p_ == 2) {
    for (std::uint32_t i = 0; i <= n_; ++i) {
      if (modulus_[i]) modulus_bits_ |= std::uint64_t{1} << i;
    }
  }
}

std::vector<std::uint32_t> PolyBasis::digits(Value a) const {
  std::vector<std::uint32_t> d(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

Value PolyBasis::encode(const std::uint32_t* d, std::size_t count) const {
  Value v = 0;
  for (std::size_t i = count; i-- > 0;) v = v * p_ + d[i];
  return v;
}

Value PolyBasis::add(Value a, Value b) const {
  if (p_ == 2) return a ^ b;
  Value out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint64_t s = (a % p_ + b % p_) % p_;
    out += s * place_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

Value PolyBasis::neg(Value a) const {
  if (p_ == 2) return a;
  Value out = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint64_t d = a % p_;
    out += ((p_ - d) % p_) * place_[i];
    a /= p_;
  }
  return out;
}

Value PolyBasis::sub(Value a, Value b) const { return p_ == 2 ? a ^ b : add(a, neg(b)); }

Value PolyBasis::reduce2(u128 r) const {
  for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
    if ((r >> i) & 1) r ^= static_cast<u128>(modulus_bits_) << (i - static_cast<int>(n_));
  }
  return static_cast<Value>(r);
}

Value PolyBasis::mul(Value a, Value b) const {
  if (p_ == 2) return reduce2(clmul(a, b));
  std::array<std::uint64_t, 128> prod{};
  std::array<std::uint32_t, 64> da{}, db{};
  for (std::uint32_t i = 0; i < n_; ++i) {
    da[i] = static_cast<std::uint32_t>(a % p_);
    db[i] = static_cast<std::uint32_t>(b % p_);
    a /= p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    }
  }
  for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < n_; ++j) {
      const std::uint64_t t = (p_ - modulus_[j]) % p_;
      prod[i - n_ + j] = (prod[i - n_ + j] + t * c) % p_;
    }
  }
  Value out = 0;
  for (std::uint32_t i = n_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

Value PolyBasis::pow(Value a, std::uint64_t e) const {
  Value result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return result;
}

Value PolyBasis::x() const {
  if (n_ >= 2) return p_;
  return (p_ - modulus_[0]) % p_;
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(nt::powmod(a, p - 2, p));
}

std::vector<std::uint32_t> prime_poly_trim(std::vector<std::uint32_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<std::uint32_t> prime_poly_mod(std::vector<std::uint32_t> a,
                                          const std::vector<std::uint32_t>& m,
                                          std::uint32_t p) {
  a = prime_poly_trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inverse_mod_prime(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * m[j] % p) % p);
    }
    a = prime_poly_trim(std::move(a));
  }
  return a;
}

std::vector<std::uint32_t> prime_poly_gcd(std::vector<std::uint32_t> a,
                                          std::vector<std::uint32_t> b, std::uint32_t p) {
  a = prime_poly_trim(std::move(a));
  b = prime_poly_trim(std::move(b));
  while (!b.empty()) {
    auto r = prime_poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inverse_mod_prime(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
  }
  return a;
}

}  // namespace detail

namespace {

std::atomic<std::uint64_t> next_field_id{1};

std::uint64_t checked_order(std::uint32_t p, std::uint32_t n) {
  auto q = nt::checked_pow(p, n);
  if (!q || *q > (std::uint64_t{1} << 63)) {
    throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                     " exceeds 2^63");
  }
  return *q;
}

bool has_full_order(const detail::PolyBasis& ring, Value a, std::uint64_t group_order,
                    const std::vector<std::uint64_t>& factors) {
  if (ring.pow(a, group_order) != 1) return false;
  for (auto r : factors) {
    if (ring.pow(a, group_order / r) == 1) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible_over_prime(std::uint32_t p, std::span<const std::uint32_t> monic) {
  const auto n = static_cast<std::uint32_t>(monic.size() - 1);
  if (n == 1) return true;
  std::vector<std::uint32_t> m(monic.begin(), monic.end());
  detail::PolyBasis ring(p, n, m);
  const Value x = ring.x();
  auto frob_x = [&](std::uint32_t k) {
    Value y = x;
    for (std::uint32_t i = 0; i < k; ++i) y = ring.pow(y, p);
    return y;
  };
  if (frob_x(n) != x) return false;
  for (auto r : nt::prime_factors(n)) {
    const Value h = ring.sub(frob_x(n / static_cast<std::uint32_t>(r)), x);
    auto g = detail::prime_poly_gcd(m, ring.digits(h), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
  }
  const std::uint64_t q = checked_order(p, n);
  const auto factors = nt::prime_factors(q - 1);
  std::vector<std::uint32_t> found;
  for (std::uint64_t low = 1; low < q; ++low) {
    std::vector<std::uint32_t> cand(n + 1);
    std::uint64_t v = low;
    for (std::uint32_t i = 0; i < n; ++i) {
      cand[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    cand[n] = 1;
    if (cand[0] == 0) continue;
    detail::PolyBasis ring(p, n, cand);
    if (has_full_order(ring, ring.x(), q - 1, factors)) {
      found = std::move(cand);
      break;
    }
  }
  if (found.empty()) throw FieldError("no primitive polynomial found");
  std::lock_guard lock(mu);
  cache[{p, n}] = found;
  return found;
}

Field::Field() = default;
Field::~Field() = default;

FieldPtr Field::build(std::uint32_t p, std::uint32_t n,
                      std::optional<std::vector<std::uint32_t>> modulus, FieldOptions options) {
  if (!nt::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw FieldError("degree must be positive");
  const std::uint64_t q = checked_order(p, n);

  std::vector<std::uint32_t> m;
  if (modulus) {
    m = detail::prime_poly_trim(*modulus);
    for (auto c : m) {
      if (c >= p) throw FieldError("modulus coefficient out of range for GF(" + std::to_string(p) + ")");
    }
    if (m.size() != n + 1) {
      throw FieldError("modulus degree " + std::to_string(m.empty() ? 0 : m.size() - 1) +
                       " does not match n = " + std::to_string(n));
    }
    if (m.back() != 1) throw FieldError("modulus is not monic");
    if (!is_irreducible_over_prime(p, m)) throw FieldError("modulus is reducible");
  } else {
    m = default_modulus(p, n);
  }

  std::shared_ptr<Field> f(new Field());
  f->id_ = next_field_id++;
  f->p_ = p;
  f->n_ = n;
  f->order_ = q;
  f->modulus_ = m;
  f->options_ = options;
  f->basis_ = std::make_shared<detail::PolyBasis>(p, n, m);
  f->group_factors_ = nt::prime_factors(q - 1);

  const auto& ring = *f->basis_;
  if (has_full_order(ring, ring.x(), q - 1, f->group_factors_)) {
    f->primitive_ = ring.x();
    f->modulus_primitive_ = true;
  } else {
    for (Value v = 1; v < q; ++v) {
      if (has_full_order(ring, v, q - 1, f->group_factors_)) {
        f->primitive_ = v;
        break;
      }
    }
  }

  if (q <= options.table_cutoff) {
    auto t = std::make_shared<detail::Tables>();
    const std::uint64_t g = q - 1;
    t->exp.resize(2 * g);
    t->log.assign(q, 0);
    Value cur = 1;
    for (std::uint64_t i = 0; i < g; ++i) {
      t->exp[i] = static_cast<std::uint32_t>(cur);
      t->exp[i + g] = static_cast<std::uint32_t>(cur);
      t->log[cur] = static_cast<std::uint32_t>(i);
      cur = ring.mul(cur, f->primitive_);
    }
    f->tables_ = std::move(t);
  }

  if (p == 2) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const Value b = Value{1} << i;
      Value s = 0;
      for (std::uint32_t j = 0; j < n; ++j) s ^= f->frobenius(b, j);
      if (s > 1) throw FieldError("internal: trace left the prime field");
      f->trace_mask_ |= s << i;
    }
  } else {
    f->trace_basis_.resize(n);
    Value b = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      Value s = 0;
      for (std::uint32_t j = 0; j < n; ++j) s = ring.add(s, f->frobenius(b, j));
      if (s >= p) throw FieldError("internal: trace left the prime field");
      f->trace_basis_[i] = static_cast<std::uint32_t>(s);
      b *= p;
    }
  }
  return f;
}

FieldPtr Field::attach_parent(const Field& flat, ParentLink link) {
  if (!link.parent) throw FieldError("parent link without a parent field");
  if (link.basis_images.size() != link.parent->degree()) {
    throw FieldError("parent link needs one image per parent basis element");
  }
  if (link.parent->characteristic() != flat.p_ || flat.n_ % link.parent->degree() != 0) {
    throw FieldError("parent is not a subfield candidate");
  }
  std::shared_ptr<Field> f(new Field());
  f->id_ = next_field_id++;
  f->p_ = flat.p_;
  f->n_ = flat.n_;
  f->order_ = flat.order_;
  f->modulus_ = flat.modulus_;
  f->modulus_primitive_ = flat.modulus_primitive_;
  f->primitive_ = flat.primitive_;
  f->options_ = flat.options_;
  f->group_factors_ = flat.group_factors_;
  f->basis_ = flat.basis_;
  f->tables_ = flat.tables_;
  f->trace_mask_ = flat.trace_mask_;
  f->trace_basis_ = flat.trace_basis_;
  f->link_ = std::move(link);
  return f;
}

std::uint64_t Field::half_order() const {
  if (!even_degree()) throw FieldError("field " + descriptor() + " has odd degree");
  return *nt::checked_pow(p_, n_ / 2);
}

std::string Field::descriptor() const { return std::to_string(p_) + "^" + std::to_string(n_); }

Representation Field::representation() const {
  return tables_ ? Representation::kLogTables : Representation::kPolynomialBasis;
}

Value Field::add(Value a, Value b) const { return p_ == 2 ? a ^ b : basis_->add(a, b); }
Value Field::sub(Value a, Value b) const { return p_ == 2 ? a ^ b : basis_->sub(a, b); }
Value Field::neg(Value a) const { return p_ == 2 ? a : basis_->neg(a); }

Value Field::mul(Value a, Value b) const {
  if (tables_) {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  return basis_->mul(a, b);
}

Value Field::inv(Value a) const {
  if (a == 0) throw FieldError("inverse of zero");
  if (tables_) {
    const std::uint64_t g = order_ - 1;
    return tables_->exp[(g - tables_->log[a]) % g];
  }
  if (p_ == 2) {
    // Extended Euclid on bit polynomials, tracking u with u*a = r mod m.
    using detail::u128;
    auto deg = [](u128 v) {
      const auto hi = static_cast<std::uint64_t>(v >> 64);
      if (hi) return 127 - __builtin_clzll(hi);
      const auto lo = static_cast<std::uint64_t>(v);
      return lo ? 63 - __builtin_clzll(lo) : -1;
    };
    u128 r0 = 0, r1 = a;
    for (std::uint32_t i = 0; i <= n_; ++i) {
      if (modulus_[i]) r0 |= u128{1} << i;
    }
    u128 s0 = 0, s1 = 1;
    while (r1 != 0) {
      const int d1 = deg(r1);
      for (int d0 = deg(r0); d0 >= d1; d0 = deg(r0)) {
        r0 ^= r1 << (d0 - d1);
        s0 ^= s1 << (d0 - d1);
      }
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
    if (r0 == 1 && deg(s0) < static_cast<int>(n_)) return static_cast<Value>(s0);
  }
  return basis_->pow(a, order_ - 2);
}

Value Field::pow(Value a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (tables_) {
    const std::uint64_t g = order_ - 1;
    return tables_->exp[nt::mulmod(tables_->log[a], e % g, g)];
  }
  return basis_->pow(a, e);
}

Value Field::frobenius(Value a, std::uint64_t k) const {
  k %= n_;
  if (k == 0 || a == 0) return a;
  if (tables_) {
    const std::uint64_t g = order_ - 1;
    const std::uint64_t e = nt::powmod(p_, k, g);
    return tables_->exp[nt::mulmod(tables_->log[a], e, g)];
  }
  for (std::uint64_t i = 0; i < k; ++i) a = basis_->pow(a, p_);
  return a;
}

Value Field::from_int(std::int64_t c) const {
  const std::int64_t p = p_;
  return static_cast<Value>(((c % p) + p) % p);
}

std::uint32_t Field::trace(Value a) const {
  if (p_ == 2) return static_cast<std::uint32_t>(__builtin_popcountll(a & trace_mask_) & 1);
  std::uint64_t s = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    s = (s + (a % p_) * trace_basis_[i]) % p_;
    a /= p_;
  }
  return static_cast<std::uint32_t>(s);
}

Value Field::relative_trace(Value a, std::uint32_t subdegree) const {
  if (subdegree == 0 || n_ % subdegree != 0) {
    throw FieldError("subfield degree " + std::to_string(subdegree) + " does not divide " +
                     std::to_string(n_));
  }
  Value s = 0;
  for (std::uint32_t j = 0; j < n_ / subdegree; ++j) s = add(s, frobenius(a, std::uint64_t{j} * subdegree));
  return s;
}

Value Field::tau(Value a) const {
  if (!even_degree()) throw FieldError("conjugation needs an even-degree field, got " + descriptor());
  return frobenius(a, n_ / 2);
}

Value Field::pi(Value a) const {
  if (a == 0) throw FieldError("conjugate-reciprocal map is undefined at zero");
  return inv(tau(a));
}

bool Field::on_unit_circle(Value a) const { return a != 0 && mul(a, tau(a)) == 1; }

std::vector<Value> Field::unit_circle() const {
  const std::uint64_t q = half_order();
  const Value g = exp(q - 1);
  std::vector<Value> out;
  out.reserve(q + 1);
  Value cur = 1;
  for (std::uint64_t j = 0; j <= q; ++j) {
    out.push_back(cur);
    cur = mul(cur, g);
  }
  return out;
}

std::uint64_t Field::element_order(Value a) const {
  if (a == 0) throw FieldError("zero has no multiplicative order");
  std::uint64_t ord = order_ - 1;
  for (auto r : group_factors_) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

Value Field::exp(std::uint64_t k) const {
  if (tables_) return tables_->exp[k % (order_ - 1)];
  return pow(primitive_, k);
}

std::vector<std::uint32_t> Field::coefficients(Value a) const { return basis_->digits(a); }

Value Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw FieldError("too many coefficients for " + descriptor());
  for (auto c : coeffs) {
    if (c >= p_) throw FieldError("coefficient out of range for GF(" + std::to_string(p_) + ")");
  }
  return basis_->encode(coeffs.data(), coeffs.size());
}

FieldElem Field::elem(Value v) const {
  if (!contains(v)) throw FieldError("value out of range for " + descriptor());
  return {id_, v};
}

Value Field::value_of(const FieldElem& e) const {
  if (e.field_id != id_) throw FieldError("element belongs to a different field than " + descriptor());
  return e.value;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  return {id_, add(value_of(a), value_of(b))};
}
FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  return {id_, sub(value_of(a), value_of(b))};
}
FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  return {id_, mul(value_of(a), value_of(b))};
}
FieldElem Field::inv(const FieldElem& a) const { return {id_, inv(value_of(a))}; }
FieldElem Field::pow(const FieldElem& a, std::uint64_t e) const { return {id_, pow(value_of(a), e)}; }

Value Field::embed_from_parent(Value v) const {
  if (!link_.parent) throw FieldError(descriptor() + " has no parent field");
  const auto& images = link_.basis_images;
  if (p_ == 2) {
    Value out = 0;
    for (std::size_t i = 0; v; ++i, v >>= 1) {
      if (v & 1) out ^= images[i];
    }
    return out;
  }
  Value out = 0;
  const std::uint32_t pp = link_.parent->characteristic();
  for (std::size_t i = 0; v; ++i, v /= pp) {
    const std::uint32_t d = static_cast<std::uint32_t>(v % pp);
    if (d) out = add(out, mul(from_int(d), images[i]));
  }
  return out;
}

bool Field::extends(const Field& sub) const {
  for (const Field* f = this; f; f = f->link_.parent.get()) {
    if (f->id_ == sub.id_) return true;
  }
  return false;
}

std::uint32_t Field::degree_over(const Field& sub) const {
  if (!extends(sub)) throw FieldError(descriptor() + " is not built over " + sub.descriptor());
  return n_ / sub.n_;
}

FieldPtr build_field(std::uint32_t p, std::uint32_t n, std::optional<std::vector<std::uint32_t>> modulus,
                     FieldOptions options) {
  return Field::build(p, n, std::move(modulus), options);
}

std::uint32_t absolute_trace(const Field& f, const FieldElem& x) { return f.trace(f.value_of(x)); }

FieldElem relative_trace(const Field& f, const FieldElem& x, std::uint32_t subdegree) {
  return {f.id(), f.relative_trace(f.value_of(x), subdegree)};
}

FieldElem tau(const Field& f, const FieldElem& x) { return {f.id(), f.tau(f.value_of(x))}; }
FieldElem pi(const Field& f, const FieldElem& x) { return {f.id(), f.pi(f.value_of(x))}; }

std::vector<FieldElem> unit_circle(const Field& f) {
  std::vector<FieldElem> out;
  for (auto v : f.unit_circle()) out.push_back({f.id(), v});
  return out;
}

Value embed(const Field& src, const Field& dst, Value x) {
  if (dst.id() == src.id()) return x;
  if (!dst.parent()) {
    throw FieldError(dst.descriptor() + " is not built over " + src.descriptor());
  }
  return dst.embed_from_parent(embed(src, *dst.parent(), x));
}

FieldElem embed(const Field& src, const Field& dst, const FieldElem& x) {
  return {dst.id(), embed(src, dst, src.value_of(x))};
}

}  // namespace niho
