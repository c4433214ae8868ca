#include "symbolic/poly_parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "common/error.hpp"

namespace jetvar {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  int small_int() {
    std::string d = digits();
    if (d.size() > 6) fail("index too large");
    return std::stoi(d);
  }
  std::vector<int> deriv_list() {
    expect_word("D=(");
    std::vector<int> out;
    if (accept(')')) return out;
    do {
      out.push_back(small_int());
    } while (accept(','));
    expect(')');
    return out;
  }

  Indeterminate indeterminate() {
    char c = peek();
    try {
      if (c == 'x' && accept_word("xi[")) {
        expect_word("r=");
        int r = small_int();
        expect(';');
        auto d = deriv_list();
        expect(']');
        return Indeterminate::gauge(r, d);
      }
      if (c == 'x') {
        expect_word("x[");
        int l = small_int();
        expect(']');
        return Indeterminate::base(l);
      }
      if (c == 'a' || c == 'B') {
        ++pos_;
        expect('[');
        expect_word("r=");
        int r = small_int();
        expect(';');
        expect_word("mu=");
        int mu = small_int();
        expect(';');
        auto d = deriv_list();
        expect(']');
        return c == 'a' ? Indeterminate::conn(r, mu, d) : Indeterminate::background(r, mu, d);
      }
      if (c == 'z') {
        expect_word("z[");
        expect_word("A=");
        int A = small_int();
        expect(';');
        auto d = deriv_list();
        expect(']');
        return Indeterminate::matter(A, d);
      }
      if (c == 't') {
        ++pos_;
        return Indeterminate::aux_t();
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      fail(e.what());
    }
    fail("expected indeterminate");
  }

  Polynomial polynomial() {
    PolyAccumulator acc;
    bool first = true;
    while (true) {
      bool negate = false;
      if (!first) {
        if (accept('+')) {
        } else if (accept('-')) {
          negate = true;
        } else {
          break;
        }
      }
      while (peek() == '-' || peek() == '+') {
        if (accept('-')) negate = !negate;
        else accept('+');
      }
      auto [mono, coeff] = term();
      acc.add(std::move(mono), negate ? -coeff : coeff);
      first = false;
      if (done()) break;
    }
    if (!done()) fail("unexpected trailing input");
    return acc.finish();
  }

 private:
  std::pair<Monomial, Rational> term() {
    Monomial mono;
    Rational coeff(1);
    bool have_factor = false;
    do {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string n = digits();
        std::string d = "1";
        if (accept('/')) d = digits();
        coeff *= Rational::parse(n + "/" + d);
      } else if (c == '(') {
        fail("parentheses are not supported");
      } else {
        Indeterminate v = indeterminate();
        unsigned e = 1;
        if (accept('^')) {
          std::string ds = digits();
          if (ds.size() > 3 || std::stoul(ds) > Monomial::kMaxExponent || std::stoul(ds) == 0)
            fail("bad exponent");
          e = static_cast<unsigned>(std::stoul(ds));
        }
        mono = mono * Monomial::of(v, e);
      }
      have_factor = true;
    } while (accept('*'));
    if (!have_factor) fail("empty term");
    return {mono, coeff};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Indeterminate parse_indeterminate(std::string_view text) {
  Reader r(text);
  Indeterminate v = r.indeterminate();
  if (!r.done()) r.fail("unexpected trailing input");
  return v;
}

Polynomial parse_polynomial(std::string_view text) {
  Reader r(text);
  if (r.done()) r.fail("empty polynomial");
  return r.polynomial();
}

}  // namespace jetvar
