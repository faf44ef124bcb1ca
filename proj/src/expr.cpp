#include "frob/expr.hpp"

#include <cctype>

namespace frob {

namespace {

class Parser {
public:
  Parser(std::string_view text, const ExprContext& ctx) : text_(normalize(text)), ctx_(ctx) {}

  Element parse() {
    Element e = expr();
    skip_space();
    if (pos_ < text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

private:
  // U+2212 MINUS SIGN becomes '-'.
  static std::string normalize(std::string_view in) {
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in.substr(i, 3) == "\xE2\x88\x92") {
        out += '-';
        i += 2;
      } else {
        out += in[i];
      }
    }
    return out;
  }

  const AlgebraPtr& alg() const { return ctx_.algebra; }
  FieldSpec field() const { return alg()->field(); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  std::optional<std::string> alias_here() {
    skip_space();
    for (const auto& [name, idx] : ctx_.aliases)
      if (text_.compare(pos_, name.size(), name) == 0) return name;
    return std::nullopt;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '{';
  }

  Element expr() {
    Element acc = term();
    while (true) {
      if (consume('+')) {
        acc += term();
      } else if (consume('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = unary();
    while (true) {
      if (consume('*')) {
        acc = acc * unary();
      } else if (starts_factor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Element unary() {
    if (consume('-')) return -unary();
    if (consume('+')) return unary();
    return power();
  }

  Element power() {
    Element base = atom();
    if (!consume('^')) return base;
    skip_space();
    const bool negative = consume('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected an integer exponent");
    const auto e = static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
    if (negative) base = element_inverse(base);
    return base.pow(e);
  }

  std::string delimited(char open, char close) {
    // Called after `open` was consumed; returns the text up to the matching `close`.
    const std::size_t start = pos_;
    int depth = 1;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == open) ++depth;
      if (text_[pos_] == close && --depth == 0) break;
    }
    if (pos_ >= text_.size()) throw ParseError(start, std::string("unterminated '") + open + "'");
    return text_.substr(start, pos_++ - start);
  }

  static std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> parts{""};
    int depth = 0;
    for (char c : s) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == ',' && depth == 0) {
        parts.emplace_back();
      } else {
        parts.back() += c;
      }
    }
    return parts;
  }

  Element atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
    if (auto name = alias_here()) {
      pos_ += name->size();
      return Element::basis(alg(), ctx_.aliases.at(*name));
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      const std::string body = delimited('[', ']');
      return Element::scalar(alg(), parse_scalar("[" + body + "]", field()));
    }
    if (c == '{') {
      ++pos_;
      const auto parts = split_top(delimited('{', '}'));
      if (parts.size() != alg()->dim())
        throw ParseError(start, "coefficient vector has " + std::to_string(parts.size()) + " entries, expected " +
                                    std::to_string(alg()->dim()));
      Vector v;
      for (const auto& p : parts) v.push_back(parse_scalar(p, field()));
      return Element(alg(), std::move(v));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      return Element::scalar(alg(), Scalar(field(), parse_rational(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return identifier(text_.substr(start, pos_ - start), start);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::optional<Element> single(const std::string& name) {
    if (auto idx = alg()->index_of(name)) return Element::basis(alg(), *idx);
    if (auto it = ctx_.aliases.find(name); it != ctx_.aliases.end()) return Element::basis(alg(), it->second);
    if (name == "q" && field().is_cyclotomic()) return Element::scalar(alg(), Scalar::root_of_unity(field(), 1));
    return std::nullopt;
  }

  Element identifier(const std::string& name, std::size_t at) {
    if (auto e = single(name)) return *e;
    Element acc = Element::one(alg());
    for (std::size_t i = 0; i < name.size(); ++i) {
      auto e = single(std::string(1, name[i]));
      if (!e) throw ParseError(at + i, "unknown identifier '" + name + "'");
      acc = acc * *e;
    }
    return acc;
  }

  std::string text_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const ExprContext& ctx) {
  if (!ctx.algebra) throw Error(ErrorKind::Usage, "no algebra to parse against");
  return Parser(text, ctx).parse();
}

}  // namespace frob
