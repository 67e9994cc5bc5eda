#include "grammar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

namespace schwarzlab::cli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at offset " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Generator generator() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    expect('(');
    Call call = arguments();
    expect(')');
    return build(name, std::move(call), start);
  }

  // expr [',' expr] as re + i*im.
  Complex complex_flag() {
    const Complex re = expr();
    if (accept(',')) {
      const std::size_t at = pos_;
      const Complex im = expr();
      return re + Complex(0.0, 1.0) * real_of(im, at);
    }
    return re;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  struct Value {
    std::size_t position = 0;
    std::optional<Complex> scalar;
    std::vector<Complex> list;
    std::vector<std::pair<double, double>> pairs;
    bool is_list = false;
  };

  struct Call {
    std::map<std::string, Value> named;
    std::optional<Generator> positional;
    std::size_t positional_at = 0;
  };

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_identifier() {
    skip_space();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_');
  }

  std::string identifier() {
    if (!peek_identifier()) fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // Looks ahead for `ident =` without consuming.
  bool at_named_argument() {
    const std::size_t saved = pos_;
    bool named = false;
    if (peek_identifier()) {
      identifier();
      named = peek('=');
    }
    pos_ = saved;
    return named;
  }

  Call arguments() {
    Call call;
    if (peek(')')) return call;
    do {
      if (at_named_argument()) {
        const std::size_t at = pos_;
        const std::string key = identifier();
        expect('=');
        if (call.named.count(key) != 0) {
          pos_ = at;
          fail("duplicate argument '" + key + "'");
        }
        call.named.emplace(key, value(key));
      } else {
        if (call.positional) fail("only one nested generator is allowed");
        skip_space();
        call.positional_at = pos_;
        call.positional = generator();
      }
    } while (accept(','));
    return call;
  }

  Value value(const std::string& key) {
    skip_space();
    Value v;
    v.position = pos_;
    if (accept('[')) {
      v.is_list = true;
      if (!peek(']')) {
        do {
          if (key == "atoms") {
            expect('(');
            const std::size_t wa = pos_;
            const double w = real_of(expr(), wa);
            expect(',');
            const std::size_t aa = pos_;
            const double a = real_of(expr(), aa);
            expect(')');
            v.pairs.emplace_back(w, a);
          } else {
            v.list.push_back(expr());
          }
        } while (accept(','));
      }
      expect(']');
    } else {
      v.scalar = expr();
    }
    return v;
  }

  Complex expr() {
    Complex acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Complex term() {
    Complex acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Complex d = unary();
        if (d == Complex(0.0)) {
          pos_ = at;
          fail("division by zero");
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Complex unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Complex primary() {
    skip_space();
    if (accept('(')) {
      const Complex first = expr();
      if (accept(',')) {
        const std::size_t at = pos_;
        const double im = real_of(expr(), at);
        expect(')');
        return {real_of(first, pos_), im};
      }
      expect(')');
      return first;
    }
    if (peek_identifier()) {
      const std::size_t at = pos_;
      const std::string name = identifier();
      if (name == "pi") return std::numbers::pi;
      if (name == "i") return {0.0, 1.0};
      if (name == "polar") {
        expect('(');
        const std::size_t ra = pos_;
        const double r = real_of(expr(), ra);
        expect(',');
        const std::size_t aa = pos_;
        const double a = real_of(expr(), aa);
        expect(')');
        return std::polar(r, a);
      }
      pos_ = at;
      fail("unknown name '" + name + "'");
    }
    return number();
  }

  Complex number() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected number");
    pos_ += static_cast<std::size_t>(ptr - first);
    // `2i`, but not the start of an identifier such as `in`.
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 == text_.size() ||
         !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {0.0, value};
    }
    return value;
  }

  double real_of(Complex c, std::size_t at) {
    if (c.imag() != 0.0) {
      pos_ = at;
      fail("expected a real value");
    }
    return c.real();
  }

  int integer_of(const Value& v) {
    const double x = scalar_real(v);
    if (x != std::floor(x) || std::abs(x) > 1e9) {
      throw ParseError("expected an integer", v.position);
    }
    return static_cast<int>(x);
  }

  Complex scalar_of(const Value& v) {
    if (!v.scalar) throw ParseError("expected a scalar", v.position);
    return *v.scalar;
  }

  double scalar_real(const Value& v) {
    const Complex c = scalar_of(v);
    if (c.imag() != 0.0) throw ParseError("expected a real value", v.position);
    return c.real();
  }

  static void reject_unknown(const Call& call,
                             std::initializer_list<const char*> allowed,
                             const std::string& name) {
    for (const auto& [key, value] : call.named) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) {
        throw ParseError(name + ": unknown argument '" + key + "'",
                         value.position);
      }
    }
  }

  double optional_real(const Call& call, const char* key, double fallback) {
    const auto it = call.named.find(key);
    return it == call.named.end() ? fallback : scalar_real(it->second);
  }

  Generator build(const std::string& name, Call call, std::size_t at) {
    const bool wants_nested = name == "cayley" || name == "invcayley";
    if (call.positional && !wants_nested) {
      throw ParseError(name + ": unexpected nested generator",
                       call.positional_at);
    }
    if (name == "monomial") {
      reject_unknown(call, {"k", "theta"}, name);
      const auto k = call.named.find("k");
      if (k == call.named.end()) throw ParseError("monomial: missing k", at);
      return SchwarzGenerator{MonomialRotation{
          integer_of(k->second), optional_real(call, "theta", 0.0)}};
    }
    if (name == "extremal1") {
      reject_unknown(call, {"b1", "theta"}, name);
      const auto b1 = call.named.find("b1");
      if (b1 == call.named.end()) throw ParseError("extremal1: missing b1", at);
      return SchwarzGenerator{B2Extremal{scalar_of(b1->second),
                                         optional_real(call, "theta", 0.0)}};
    }
    if (name == "blaschke") {
      reject_unknown(call, {"phi", "m", "zeros"}, name);
      FiniteBlaschke b;
      b.phi = optional_real(call, "phi", 0.0);
      if (const auto m = call.named.find("m"); m != call.named.end()) {
        b.m = integer_of(m->second);
      }
      if (const auto z = call.named.find("zeros"); z != call.named.end()) {
        if (!z->second.is_list) {
          throw ParseError("blaschke: zeros must be a list", z->second.position);
        }
        b.zeros = z->second.list;
      }
      return SchwarzGenerator{std::move(b)};
    }
    if (name == "herglotz") {
      reject_unknown(call, {"atoms"}, name);
      const auto atoms = call.named.find("atoms");
      if (atoms == call.named.end() || !atoms->second.is_list ||
          !atoms->second.list.empty()) {
        throw ParseError("herglotz: atoms=[(weight, angle), ...] required", at);
      }
      HerglotzAtoms h;
      for (const auto& [w, a] : atoms->second.pairs) h.atoms.push_back({w, a});
      return CaratheodoryGenerator{std::move(h)};
    }
    if (wants_nested) {
      reject_unknown(call, {"theta"}, name);
      if (!call.positional) {
        throw ParseError(name + ": missing nested generator", at);
      }
      const double theta = optional_real(call, "theta", 0.0);
      if (name == "cayley") {
        auto* inner = std::get_if<SchwarzGenerator>(&*call.positional);
        if (!inner) {
          throw ParseError("cayley: nested generator must be a Schwarz function",
                           call.positional_at);
        }
        return make_cayley(std::move(*inner), theta);
      }
      auto* inner = std::get_if<CaratheodoryGenerator>(&*call.positional);
      if (!inner) {
        throw ParseError(
            "invcayley: nested generator must be a Caratheodory function",
            call.positional_at);
      }
      return make_inverse_cayley(std::move(*inner), theta);
    }
    throw ParseError("unknown generator '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Generator parse_generator(std::string_view text) {
  Parser p(text);
  Generator g = p.generator();
  p.finish();
  return g;
}

Complex parse_complex(std::string_view text) {
  Parser p(text);
  const Complex c = p.complex_flag();
  p.finish();
  return c;
}

}  // namespace schwarzlab::cli
