#include "detsing/poly.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace detsing {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NotDeterminantal: return "NotDeterminantal";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotIsolatedCriticalLocus: return "NotIsolatedCriticalLocus";
    case ErrorKind::ResourceLimit: return "ResourceLimitExceeded";
    case ErrorKind::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::Inconclusive: return "Inconclusive";
  }
  return "Error";
}

Fp Fp::pow(std::uint64_t e) const {
  Fp r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in Z/p");
  return pow(kModulus - 2);
}

Fp FieldTraits<Fp>::from_rational(const mpq_class& q) {
  const mpz_class p(static_cast<unsigned long>(Fp::kModulus));
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0)
    throw std::domain_error("denominator vanishes modulo the working prime");
  return Fp(static_cast<std::uint32_t>(num.get_ui())) /
         Fp(static_cast<std::uint32_t>(den.get_ui()));
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars)
    fail(ErrorKind::InvalidType,
         "at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!is_identifier(v)) fail(ErrorKind::Parse, "bad variable name '" + v + "'");
    if (!seen.insert(v).second)
      fail(ErrorKind::Parse, "duplicate variable '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  auto i = index(name);
  if (!i) fail(ErrorKind::UnknownVariable, std::string(name));
  return *i;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::string fresh_name(const Ring& taken, const std::string& base) {
  if (!taken.index(base)) return base;
  for (int k = 0;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!taken.index(candidate)) return candidate;
  }
}

const MonomialOrder& canonical_order(std::size_t nvars) {
  static const std::vector<MonomialOrder> orders = [] {
    std::vector<MonomialOrder> v;
    for (std::size_t n = 0; n <= kMaxVars; ++n)
      v.push_back(MonomialOrder::degrevlex(n));
    return v;
  }();
  return orders.at(nvars);
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

template <class C>
std::string render(const Polynomial<C>& f, auto&& is_negative, auto&& magnitude,
                   auto&& is_unit) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = is_negative(t.coeff);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono = to_string(t.mono, *f.ring());
    if (t.mono.is_one()) {
      out += magnitude(t.coeff);
    } else if (is_unit(t.coeff)) {
      out += mono;
    } else {
      out += magnitude(t.coeff) + "*" + mono;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Poly& f) {
  return render(
      f, [](const mpq_class& c) { return sgn(c) < 0; },
      [](const mpq_class& c) { return mpq_class(abs(c)).get_str(); },
      [](const mpq_class& c) { return abs(c) == 1; });
}

std::string to_string(const PolyModp& f) {
  return render(
      f, [](Fp) { return false; },
      [](Fp c) { return std::to_string(c.value()); },
      [](Fp c) { return c.value() == 1; });
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + msg +
                               " in \"" + std::string(text_) + "\"");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Poly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_atom()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) error("expected exponent");
      if (pos_ - start > 4) error("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      mpq_class value(mpz_class(std::string(text_.substr(start, pos_ - start))));
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
        if (ds == pos_) error("expected denominator");
        mpz_class den(std::string(text_.substr(ds, pos_ - ds)));
        if (den == 0) error("zero denominator");
        value /= mpq_class(den);
      }
      return Poly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index(name);
      if (!idx) {
        pos_ = start;
        error("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

Poly substitute(const Poly& f, const std::map<std::string, Poly>& assignment,
                RingPtr target) {
  const Ring& source = *f.ring();
  for (const auto& [name, value] : assignment) {
    if (!source.index(name))
      fail(ErrorKind::UnknownVariable, "'" + name + "' is not a variable of the source ring");
    if (!target) target = value.ring();
    if (!same_ring(target, value.ring()))
      fail(ErrorKind::RingMismatch, "assignment values live in different rings");
  }
  if (!target) target = f.ring();
  std::vector<Poly> images;
  images.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto it = assignment.find(source.name(i));
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (auto j = target->index(source.name(i))) {
      images.push_back(Poly::variable(target, *j));
    } else {
      bool occurs = std::any_of(f.terms().begin(), f.terms().end(),
                                [&](const Poly::Term& t) { return t.mono[i] != 0; });
      if (occurs)
        fail(ErrorKind::UnknownVariable,
             "'" + source.name(i) + "' has no image in the target ring");
      images.push_back(Poly(target));
    }
  }
  return f.compose(target, images);
}

LinearForm::LinearForm(Poly p) : poly_(std::move(p)) {
  if (poly_.is_zero() || poly_.total_degree() != 1 || !poly_.is_homogeneous())
    fail(ErrorKind::InvalidType,
         "a linear form must be nonzero, homogeneous of degree 1: " + to_string(poly_));
  coeffs_.assign(poly_.ring()->size(), mpq_class(0));
  for (const auto& t : poly_.terms())
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (t.mono[i] == 1) coeffs_[i] = t.coeff;
}

LinearForm LinearForm::from_coefficients(const RingPtr& ring,
                                         const std::vector<mpq_class>& coeffs) {
  if (coeffs.size() != ring->size())
    fail(ErrorKind::InvalidType, "coefficient vector length differs from ring size");
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    terms.push_back({Monomial::variable(i), coeffs[i]});
  return LinearForm(Poly::from_terms(ring, std::move(terms)));
}

std::size_t LinearForm::pivot() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (sgn(coeffs_[i]) != 0) return i;
  return 0;
}

}  // namespace detsing
