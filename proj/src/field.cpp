#include <gsf/field.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace gsf {

namespace detail {

struct FieldData {
  FieldKind kind;
  std::uint32_t p = 0;
  int k = 0;
  std::vector<std::uint32_t> modulus;  // k+1 entries, monic
  std::string descriptor;
};

}  // namespace detail

namespace {

using detail::FieldData;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Remainder of `num` modulo the monic `den` over F_p; both constant term first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> num, const std::vector<std::uint32_t>& den,
                                    std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const std::uint32_t lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    if (lead != 0)
      for (std::size_t i = 0; i <= dd; ++i)
        num[shift + i] = (num[shift + i] + p - mulmod(lead, den[i], p)) % p;
    num.pop_back();
  }
  return num;
}

// Exhaustive search for a monic factor of degree 1..k/2.
bool is_irreducible(const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const int k = static_cast<int>(modulus.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> f(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[d] = 1;
      auto r = poly_rem(modulus, f, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

class Registry {
 public:
  const FieldData* intern(FieldData data) {
    std::lock_guard lock(mu_);
    auto it = index_.find(data.descriptor);
    if (it != index_.end()) return it->second;
    store_.push_back(std::move(data));
    const FieldData* ptr = &store_.back();
    index_.emplace(ptr->descriptor, ptr);
    return ptr;
  }

 private:
  std::mutex mu_;
  std::deque<FieldData> store_;
  std::map<std::string, const FieldData*> index_;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below: empty range");
  const std::uint64_t limit = Rng::max() - (Rng::max() - bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() {
  FieldData d;
  d.kind = FieldKind::rationals;
  d.descriptor = "q";
  return Field(registry().intern(std::move(d)));
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("gf(" + std::to_string(p) + "): modulus is not prime");
  if (p >= (1u << 31)) throw InputError("gf(p): p must be below 2^31");
  FieldData d;
  d.kind = FieldKind::prime;
  d.p = p;
  d.k = 1;
  d.descriptor = "gf(" + std::to_string(p) + ")";
  return Field(registry().intern(std::move(d)));
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InputError("gf(" + std::to_string(p) + ",...): characteristic is not prime");
  if (p > kMaxExtensionPrime)
    throw InputError("extension fields are supported for p <= " + std::to_string(kMaxExtensionPrime));
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k < 2 || k > kMaxDegree)
    throw InputError("extension degree must be in [2, " + std::to_string(kMaxDegree) + "]");
  for (auto c : modulus)
    if (c >= p) throw InputError("modulus coefficient " + std::to_string(c) + " not reduced mod p");
  if (modulus.back() != 1) throw InputError("modulus must be monic");
  if (!is_irreducible(modulus, p)) throw InputError("modulus is reducible over F_" + std::to_string(p));
  FieldData d;
  d.kind = FieldKind::extension;
  d.p = p;
  d.k = k;
  std::ostringstream os;
  os << "gf(" << p << "," << k << ";";
  for (std::size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
  os << ")";
  d.descriptor = os.str();
  d.modulus = std::move(modulus);
  return Field(registry().intern(std::move(d)));
}

Field Field::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "q" || s == "rationals") return rationals();
  if (s.size() < 5 || s.rfind("gf(", 0) != 0 || s.back() != ')')
    throw InputError("unrecognized field descriptor '" + std::string(text) + "'");
  std::string_view body(s);
  body = body.substr(3, body.size() - 4);
  const auto semi = body.find(';');
  if (semi == std::string_view::npos) {
    return prime(static_cast<std::uint32_t>(parse_uint(body, "prime")));
  }
  auto head = split(body.substr(0, semi), ',');
  if (head.size() != 2) throw InputError("extension descriptor must be gf(p,k;c0,...,ck)");
  const auto p = parse_uint(head[0], "prime");
  const auto k = parse_uint(head[1], "degree");
  std::vector<std::uint32_t> modulus;
  for (auto c : split(body.substr(semi + 1), ','))
    modulus.push_back(static_cast<std::uint32_t>(parse_uint(c, "modulus coefficient")));
  if (modulus.size() != k + 1)
    throw InputError("modulus of degree " + std::to_string(k) + " needs " + std::to_string(k + 1) + " coefficients");
  if (p > 0xffffffffu) throw InputError("prime too large");
  return extension(static_cast<std::uint32_t>(p), std::move(modulus));
}

FieldKind Field::kind() const { return d_->kind; }
std::uint32_t Field::p() const { return d_->p; }
int Field::degree() const { return d_->k; }
std::span<const std::uint32_t> Field::modulus() const { return d_->modulus; }
std::uint32_t Field::characteristic() const { return d_->p; }
const std::string& Field::descriptor() const { return d_->descriptor; }

std::optional<std::uint64_t> Field::order() const {
  if (d_->kind == FieldKind::rationals) return std::nullopt;
  std::uint64_t q = 1;
  for (int i = 0; i < d_->k; ++i) q *= d_->p;
  return q;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  switch (d_->kind) {
    case FieldKind::rationals:
      return Scalar(*this, mpq_class(mpz_class(std::to_string(v))));
    case FieldKind::prime: {
      const long long p = d_->p;
      return Scalar(*this, static_cast<std::uint32_t>(((v % p) + p) % p));
    }
    case FieldKind::extension: {
      const long long p = d_->p;
      Poly c{};
      c[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
      return Scalar(*this, c);
    }
  }
  throw Error("unreachable field kind");
}

Scalar Field::random(Rng& rng, int rational_bound) const {
  switch (d_->kind) {
    case FieldKind::rationals: {
      const auto span = static_cast<std::uint64_t>(2 * rational_bound + 1);
      return from_int(static_cast<long long>(uniform_below(rng, span)) - rational_bound);
    }
    case FieldKind::prime:
      return Scalar(*this, static_cast<std::uint32_t>(uniform_below(rng, d_->p)));
    case FieldKind::extension: {
      Poly c{};
      for (int i = 0; i < d_->k; ++i) c[i] = static_cast<std::uint32_t>(uniform_below(rng, d_->p));
      return Scalar(*this, c);
    }
  }
  throw Error("unreachable field kind");
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty scalar");
  switch (d_->kind) {
    case FieldKind::rationals: {
      mpq_class q;
      if (q.set_str(s, 10) != 0) throw InputError("invalid rational '" + s + "'");
      if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
      q.canonicalize();
      return Scalar(*this, q);
    }
    case FieldKind::prime: {
      mpz_class z;
      if (z.set_str(s, 10) != 0) throw InputError("invalid residue '" + s + "'");
      mpz_class r = z % d_->p;
      if (r < 0) r += d_->p;
      return Scalar(*this, static_cast<std::uint32_t>(r.get_ui()));
    }
    case FieldKind::extension: {
      auto parts = split(s, ':');
      if (parts.size() != static_cast<std::size_t>(d_->k))
        throw InputError("extension scalar needs " + std::to_string(d_->k) + " ':'-separated coefficients");
      Poly c{};
      for (int i = 0; i < d_->k; ++i) {
        const auto v = parse_uint(parts[i], "coefficient");
        if (v >= d_->p) throw InputError("coefficient " + std::to_string(v) + " not reduced mod p");
        c[i] = static_cast<std::uint32_t>(v);
      }
      return Scalar(*this, c);
    }
  }
  throw Error("unreachable field kind");
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {
  if (f.kind() != FieldKind::rationals) throw FieldMismatch("rational value for " + f.descriptor());
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(Field f, std::uint32_t residue) : field_(f), value_(residue % std::max<std::uint32_t>(f.p(), 1)) {
  if (f.kind() != FieldKind::prime) throw FieldMismatch("residue value for " + f.descriptor());
}

Scalar::Scalar(Field f, const Poly& coeffs) : field_(f), value_(coeffs) {
  if (f.kind() != FieldKind::extension) throw FieldMismatch("polynomial value for " + f.descriptor());
  auto& c = std::get<Poly>(value_);
  for (int i = 0; i < Field::kMaxDegree; ++i) c[i] = i < f.degree() ? c[i] % f.p() : 0;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("field mismatch: " + field_.descriptor() + " vs " + o.field_.descriptor());
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::rationals: return sgn(std::get<mpq_class>(value_)) == 0;
    case FieldKind::prime: return std::get<std::uint32_t>(value_) == 0;
    case FieldKind::extension: {
      const auto& c = std::get<Poly>(value_);
      return std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; });
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == field_.one(); }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }
std::uint32_t Scalar::residue() const { return std::get<std::uint32_t>(value_); }
const Poly& Scalar::coeffs() const { return std::get<Poly>(value_); }

Scalar Scalar::canonical() const {
  switch (field_.kind()) {
    case FieldKind::rationals: return Scalar(field_, rational());
    case FieldKind::prime: return Scalar(field_, residue());
    case FieldKind::extension: return Scalar(field_, coeffs());
  }
  return *this;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::rationals: return rational().get_str();
    case FieldKind::prime: return std::to_string(residue());
    case FieldKind::extension: {
      std::string s;
      for (int i = 0; i < field_.degree(); ++i) s += (i ? ":" : "") + std::to_string(coeffs()[i]);
      return s;
    }
  }
  return {};
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  const std::uint32_t p = field_.p();
  switch (field_.kind()) {
    case FieldKind::rationals: std::get<mpq_class>(r.value_) = -rational(); break;
    case FieldKind::prime: std::get<std::uint32_t>(r.value_) = (p - residue()) % p; break;
    case FieldKind::extension:
      for (auto& c : std::get<Poly>(r.value_)) c = (p - c) % p;
      break;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  const std::uint32_t p = field_.p();
  switch (field_.kind()) {
    case FieldKind::rationals: std::get<mpq_class>(value_) += o.rational(); break;
    case FieldKind::prime: {
      auto& v = std::get<std::uint32_t>(value_);
      v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) + o.residue()) % p);
      break;
    }
    case FieldKind::extension: {
      auto& c = std::get<Poly>(value_);
      for (int i = 0; i < Field::kMaxDegree; ++i) c[i] = (c[i] + o.coeffs()[i]) % p;
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  const std::uint32_t p = field_.p();
  switch (field_.kind()) {
    case FieldKind::rationals: std::get<mpq_class>(value_) *= o.rational(); break;
    case FieldKind::prime: {
      auto& v = std::get<std::uint32_t>(value_);
      v = mulmod(v, o.residue(), p);
      break;
    }
    case FieldKind::extension: {
      const int k = field_.degree();
      const auto& a = coeffs();
      const auto& b = o.coeffs();
      std::vector<std::uint32_t> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
      const auto m = field_.modulus();
      auto rem = poly_rem(std::move(prod), std::vector<std::uint32_t>(m.begin(), m.end()), p);
      Poly c{};
      for (std::size_t i = 0; i < rem.size(); ++i) c[i] = rem[i];
      std::get<Poly>(value_) = c;
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.descriptor());
  switch (field_.kind()) {
    case FieldKind::rationals: return Scalar(field_, mpq_class(1) / rational());
    case FieldKind::prime: return Scalar(field_, powmod(residue(), field_.p() - 2, field_.p()));
    case FieldKind::extension: {
      // a^(q-2) in the multiplicative group of order q-1.
      std::uint64_t e = *field_.order() - 2;
      Scalar base = *this;
      Scalar r = field_.one();
      while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
      }
      return r;
    }
  }
  throw Error("unreachable field kind");
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

}  // namespace gsf
