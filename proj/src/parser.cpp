#include "cpalg/parser.hpp"

#include <cctype>
#include <vector>

namespace cpalg {

namespace {

constexpr long long kMaxNat = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr run() {
    GroupExpr result = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  // Gm / Ga exponents change meaning, so the atom reports what it was.
  enum class AtomKind { plain, gm, ga };

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  long long nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxNat) fail("number too large");
      ++pos_;
    }
    return value;
  }

  // Reads a maximal run of ASCII letters. 'x' never occurs inside a group
  // name, so it always acts as the product separator even without spaces.
  std::string word() {
    skip_ws();
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != 'x') {
      w += text_[pos_];
      ++pos_;
    }
    return w;
  }

  GroupExpr parse_expr() {
    std::vector<GroupExpr> factors;
    parse_term(factors);
    while (true) {
      skip_ws();
      if (peek() != 'x') break;
      ++pos_;
      parse_term(factors);
    }
    return GroupExpr::product(std::move(factors));
  }

  void parse_term(std::vector<GroupExpr>& out) {
    AtomKind kind = AtomKind::plain;
    GroupExpr atom = parse_atom(kind);
    long long power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      power = nat();
      if (power < 1) fail("power must be >= 1");
    }
    if (kind == AtomKind::gm) {
      out.push_back(GroupExpr::torus(power));
      return;
    }
    if (kind == AtomKind::ga) {
      out.push_back(GroupExpr::additive(power));
      return;
    }
    for (long long k = 0; k < power; ++k) out.push_back(atom);
  }

  GroupExpr parse_atom(AtomKind& kind) {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return GroupExpr::trivial();
    }
    const std::size_t at = pos_;
    const std::string w = word();
    if (w.empty()) fail("expected a group atom");
    if (w == "Gm") {
      kind = AtomKind::gm;
      return GroupExpr::torus(1);
    }
    if (w == "Ga") {
      kind = AtomKind::ga;
      return GroupExpr::additive(1);
    }
    if (w == "GL") {
      expect('(', "after GL");
      const long long n = nat();
      expect(')', "to close GL(n)");
      if (n < 1) fail_at("GL(n) requires n >= 1", at);
      return GroupExpr::general_linear(n);
    }
    if (w == "T") {
      expect('(', "after T");
      const long long d = nat();
      expect(')', "to close T(d)");
      if (d < 1) fail_at("T(d) requires d >= 1", at);
      return GroupExpr::torus(d);
    }
    if (w == "U" || w == "B") {
      expect('(', w == "U" ? "after U" : "after B");
      SimpleType inner = parse_simple();
      expect(')', "to close the simple-group argument");
      return w == "U" ? GroupExpr::unipotent_radical(inner) : GroupExpr::borel(inner);
    }
    pos_ = at;
    return GroupExpr::simple(parse_simple());
  }

  SimpleType parse_simple() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string w = word();
    if (w == "G" || w == "F" || w == "E") {
      // exceptional names carry their rank as a digit: G2, F4, E6, E7, E8
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a rank digit");
      const char d = text_[pos_++];
      if (w == "G" && d == '2') return SimpleType::make(SimpleFamily::G2, 2);
      if (w == "F" && d == '4') return SimpleType::make(SimpleFamily::F4, 4);
      if (w == "E" && d == '6') return SimpleType::make(SimpleFamily::E6, 6);
      if (w == "E" && d == '7') return SimpleType::make(SimpleFamily::E7, 7);
      if (w == "E" && d == '8') return SimpleType::make(SimpleFamily::E8, 8);
      fail_at("unknown exceptional type " + w + d, at);
    }
    if (w == "SL") {
      expect('(', "after SL");
      const long long m = nat();
      expect(')', "to close SL(m)");
      if (m < 2) fail_at("SL(1) is the trivial group; write 1", at);
      return SimpleType::make(SimpleFamily::A, static_cast<int>(m - 1));
    }
    if (w == "Sp") {
      expect('(', "after Sp");
      const long long m = nat();
      expect(')', "to close Sp(m)");
      if (m % 2 != 0 || m == 0) fail_at("Sp takes a positive even argument", at);
      const long long r = m / 2;
      if (r == 1) return SimpleType::make(SimpleFamily::A, 1);  // Sp(2) = SL(2)
      if (r == 2) return SimpleType::make(SimpleFamily::B, 2);  // Sp(4) ~ SO(5)
      return SimpleType::make(SimpleFamily::C, static_cast<int>(r));
    }
    if (w == "SO") {
      expect('(', "after SO");
      const long long m = nat();
      expect(')', "to close SO(m)");
      if (m <= 2) fail_at("SO(" + std::to_string(m) + ") is not a simple group", at);
      if (m == 3) fail_at("SO(3) is below the canonical B range; write SL(2)", at);
      if (m == 4) fail_at("SO(4) is not simple; write SL(2) x SL(2)", at);
      if (m == 6) return SimpleType::make(SimpleFamily::A, 3);  // SO(6) ~ SL(4)
      if (m % 2 == 1) return SimpleType::make(SimpleFamily::B, static_cast<int>((m - 1) / 2));
      return SimpleType::make(SimpleFamily::D, static_cast<int>(m / 2));
    }
    fail_at(w.empty() ? "expected a simple group" : "unknown group name " + w, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace cpalg
