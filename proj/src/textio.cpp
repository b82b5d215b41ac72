#include "qshift/textio.hpp"

#include <cctype>
#include <sstream>

namespace qshift {

namespace {

void append_term(std::ostringstream& os, bool first, const Rat& c, int e) {
  Rat a = c;
  if (first) {
    if (a < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  const bool unit = a == 1;
  if (e == 0) {
    os << a.get_str();
    return;
  }
  if (!unit) os << a.get_str() << "*";
  os << "q";
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string laurent_to_string(const LaurentQ& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponent order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(os, first, it->second, it->first);
    first = false;
  }
  return os.str();
}

std::string ratq_to_string(const RatQ& f) {
  if (f.is_zero()) return "0";
  const std::string num = laurent_to_string(f.num());
  if (f.den().is_one()) return num;
  const std::string den = laurent_to_string(f.den());
  std::ostringstream os;
  if (f.num().term_count() > 1)
    os << "(" << num << ")";
  else
    os << num;
  os << "/";
  if (f.den().term_count() > 1)
    os << "(" << den << ")";
  else
    os << den;
  return os.str();
}

namespace {

class RatQParser {
 public:
  explicit RatQParser(const std::string& s) : s_(s) {}

  RatQ parse() {
    RatQ v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input in expression");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RatQ expr() {
    RatQ v = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  RatQ term() {
    RatQ v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }

  RatQ factor() {
    RatQ v = atom();
    if (eat('^')) return v.pow(integer());
    return v;
  }

  RatQ atom() {
    skip_ws();
    if (eat('(')) {
      RatQ v = expr();
      if (!eat(')')) throw ParseError("missing )");
      return v;
    }
    const char c = peek();
    if (c == 'q') {
      ++pos_;
      return RatQ::q_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RatQ(rat(integer()));
    throw ParseError("unexpected character in expression");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatQ ratq_from_string(const std::string& text) {
  return RatQParser(text).parse();
}

std::string lweight_to_string(const LWeight& w) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " * ";
    first = false;
  };
  for (std::size_t i = 0; i < w.torus.size(); ++i) {
    if (w.torus[i] == 0) continue;
    sep();
    os << "t[" << i + 1 << "]";
    if (w.torus[i] != 1) os << "^" << w.torus[i];
  }
  for (const auto& [key, e] : w.psi) {
    sep();
    os << "Psi[" << key.first << "," << key.second << "]";
    if (e != 1) os << "^" << e;
  }
  return first ? "1" : os.str();
}

namespace {

struct LwToken {
  std::string name;
  std::vector<int> args;
  int exp = 1;
};

std::vector<LwToken> lex_lweight(const std::string& text) {
  std::vector<LwToken> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto integer = [&]() -> int {
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected integer in l-weight");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  };
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '*') {
      ++pos;
      continue;
    }
    if (text[pos] == '1') {
      ++pos;
      continue;  // identity factor
    }
    LwToken tok;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      tok.name.push_back(text[pos++]);
    skip_ws();
    if (pos >= text.size() || text[pos] != '[')
      throw ParseError("expected [ after generator name");
    ++pos;
    tok.args.push_back(integer());
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      tok.args.push_back(integer());
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != ']')
      throw ParseError("expected ] in l-weight");
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      tok.exp = integer();
    }
    out.push_back(std::move(tok));
  }
  return out;
}

}  // namespace

LWeight lweight_from_string(const CartanData& cd, const std::string& text) {
  LWeight w = lw_identity(cd);
  for (const LwToken& tok : lex_lweight(text)) {
    if (tok.name == "Psi" && tok.args.size() == 2) {
      w = lw_multiply(w, lw_psi(cd, tok.args[0], tok.args[1], tok.exp));
    } else if (tok.name == "Y" && tok.args.size() == 2) {
      w = lw_multiply(w, lw_from_Y(cd, tok.args[0], tok.args[1], tok.exp));
    } else if (tok.name == "A" && tok.args.size() == 2) {
      w = lw_multiply(w, lw_power(lw_A(cd, tok.args[0], tok.args[1]), tok.exp));
    } else if (tok.name == "t" && tok.args.size() == 1) {
      if (!cd.valid_node(tok.args[0]))
        throw ParseError("torus node out of range");
      LWeight f = lw_identity(cd);
      f.torus[static_cast<std::size_t>(tok.args[0] - 1)] = tok.exp;
      w = lw_multiply(w, f);
    } else {
      throw ParseError("unknown l-weight factor " + tok.name);
    }
  }
  return w;
}

std::string torus_to_string(const TorusWeight& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << "q^" << t[i];
  }
  os << ")";
  return os.str();
}

std::string coweight_to_string(const Coweight& mu) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) continue;
    if (!first) os << (mu[i] > 0 ? " + " : " - ");
    else if (mu[i] < 0) os << "-";
    first = false;
    const int a = std::abs(mu[i]);
    if (a != 1) os << a << "*";
    os << "w" << i + 1 << "v";
  }
  return first ? "0" : os.str();
}

std::string a_monomial_to_string(const AMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : m) {
    if (!first) os << " * ";
    first = false;
    os << "A[" << key.first << "," << key.second << "]^-" << e;
  }
  return os.str();
}

std::string y_monomial_to_string(const YMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : m) {
    if (!first) os << " * ";
    first = false;
    os << "Y[" << key.first << "," << key.second << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace qshift
