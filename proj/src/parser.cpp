#include "ctopo/parser.hpp"

#include <cctype>
#include <set>

namespace ctopo {
namespace {

// ---- Lexer ----

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  std::size_t pos = 0;  // 1-based column
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    current_.pos = i_ + 1;
    if (i_ >= src_.size()) {
      current_ = {Token::Kind::End, "", i_ + 1};
      return;
    }
    const char c = src_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[j]))) {
        ++j;
      }
      current_ = {Token::Kind::Ident, src_.substr(i_, j - i_), i_ + 1};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() && (std::isdigit(static_cast<unsigned char>(
                                     src_[j])) ||
                                 src_[j] == '/' || src_[j] == '.')) {
        ++j;
      }
      current_ = {Token::Kind::Number, src_.substr(i_, j - i_), i_ + 1};
      i_ = j;
      return;
    }
    if (std::string("()[],;:-").find(c) != std::string::npos) {
      current_ = {Token::Kind::Punct, std::string(1, c), i_ + 1};
      ++i_;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i_ + 1);
  }

  const std::string& src_;
  std::size_t i_ = 0;
  Token current_;
};

// ---- Parser ----

const std::set<std::string>& literalNames() {
  static const std::set<std::string> names = {"R", "Q", "I", "Z", "N",
                                              "empty"};
  return names;
}

const std::set<std::string>& topologicalOps() {
  static const std::set<std::string> names = {"int", "cl", "fr", "D"};
  return names;
}

const std::set<std::string>& idealOps() {
  static const std::set<std::string> names = {
      "intC", "clC", "DC", "BdC", "FrC", "ExtC", "isCopen", "isCclosed"};
  return names;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = parseExpr();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End) {
      throw ParseError("unexpected trailing input '" + t.text + "'", t.pos);
    }
    return e;
  }

 private:
  Token expectPunct(const std::string& p) {
    const Token t = lex_.take();
    if (t.kind != Token::Kind::Punct || t.text != p) {
      throw ParseError("expected '" + p + "'" +
                           (t.kind == Token::Kind::End
                                ? " before end of input"
                                : ", found '" + t.text + "'"),
                       t.pos);
    }
    return t;
  }

  ExtRational parseNumber() {
    Token t = lex_.take();
    bool negative = false;
    if (t.kind == Token::Kind::Punct && t.text == "-") {
      negative = true;
      t = lex_.take();
    }
    if (t.kind == Token::Kind::Ident && t.text == "inf") {
      return negative ? ExtRational::negInf() : ExtRational::posInf();
    }
    if (t.kind != Token::Kind::Number) {
      throw ParseError("expected a number, found '" + t.text + "'", t.pos);
    }
    try {
      const Rational r = parseRational(t.text);
      return ExtRational(negative ? -r : r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), t.pos);
    }
  }

  Rational parseFiniteNumber() {
    const std::size_t pos = lex_.peek().pos;
    const ExtRational v = parseNumber();
    if (!v.isFinite()) throw ParseError("expected a finite rational", pos);
    return v.value();
  }

  bool parseEndpointFlag() {
    const Token t = lex_.take();
    if (t.kind == Token::Kind::Ident && (t.text == "o" || t.text == "c")) {
      return t.text == "c";
    }
    throw ParseError("expected endpoint flag 'o' or 'c'", t.pos);
  }

  // Reads a context clause "[selector]" or "[selector; ideal]".
  void parseContext(ExprNode& node, bool wantIdeal) {
    const Token open = lex_.peek();
    if (!(open.kind == Token::Kind::Punct && open.text == "[")) {
      throw ParseError("operator '" + node.head +
                           "' requires a context clause '[...]'",
                       open.pos);
    }
    lex_.take();
    std::string sel;
    std::size_t selPos = lex_.peek().pos;
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::End) {
        throw ParseError("unterminated context clause", t.pos);
      }
      if (t.kind == Token::Kind::Punct &&
          (t.text == "]" || t.text == ";")) {
        break;
      }
      sel += lex_.take().text;
    }
    try {
      (void)topologyFromSelector(sel);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), selPos);
    }
    node.topologySelector = sel;
    const Token t = lex_.take();
    if (t.text == ";") {
      const Token ideal = lex_.take();
      if (ideal.kind != Token::Kind::Ident ||
          (ideal.text != "finite" && ideal.text != "countable")) {
        throw ParseError("expected ideal selector 'finite' or 'countable'",
                         ideal.pos);
      }
      if (!wantIdeal) {
        throw ParseError("operator '" + node.head +
                             "' takes a topology selector only",
                         ideal.pos);
      }
      node.idealSelector = ideal.text;
      expectPunct("]");
    } else if (t.text != "]") {
      throw ParseError("expected ';' or ']'", t.pos);
    }
    if (wantIdeal && node.idealSelector.empty()) {
      throw ParseError("operator '" + node.head +
                           "' requires '[topology; ideal]'",
                       t.pos);
    }
  }

  ExprPtr parseExpr() {
    const Token t = lex_.take();
    if (t.kind != Token::Kind::Ident) {
      throw ParseError("expected an expression, found '" +
                           (t.kind == Token::Kind::End ? "end of input"
                                                       : t.text) +
                           "'",
                       t.pos);
    }
    auto node = std::make_shared<ExprNode>();
    node->head = t.text;
    if (literalNames().count(t.text)) return node;

    const bool topOp = topologicalOps().count(t.text) != 0;
    const bool idlOp = idealOps().count(t.text) != 0;
    if (topOp || idlOp) parseContext(*node, idlOp);

    expectPunct("(");
    if (t.text == "interval") {
      node->numbers.push_back(parseNumber());
      expectPunct(",");
      node->numbers.push_back(parseNumber());
      expectPunct(",");
      node->closedFlags.push_back(parseEndpointFlag());
      expectPunct(",");
      node->closedFlags.push_back(parseEndpointFlag());
    } else if (t.text == "points") {
      node->numbers.emplace_back(parseFiniteNumber());
      while (lex_.peek().text == ",") {
        lex_.take();
        node->numbers.emplace_back(parseFiniteNumber());
      }
    } else if (t.text == "prog") {
      node->numbers.emplace_back(parseFiniteNumber());
      expectPunct(",");
      const std::size_t stepPos = lex_.peek().pos;
      const Rational step = parseFiniteNumber();
      if (step <= 0) {
        throw ParseError("progression step must be positive", stepPos);
      }
      node->numbers.emplace_back(step);
      if (lex_.peek().text == ",") {
        lex_.take();
        const Token k = lex_.take();
        if (k.kind != Token::Kind::Ident ||
            (k.text != "up" && k.text != "down")) {
          throw ParseError("expected progression kind 'up' or 'down'", k.pos);
        }
        node->progKind = k.text;
      }
    } else if (t.text == "union" || t.text == "inter") {
      node->args.push_back(parseExpr());
      while (lex_.peek().text == ",") {
        lex_.take();
        node->args.push_back(parseExpr());
      }
      if (node->args.size() < 2) {
        throw ParseError("'" + t.text + "' needs at least two arguments",
                         lex_.peek().pos);
      }
    } else if (t.text == "setminus") {
      node->args.push_back(parseExpr());
      expectPunct(",");
      node->args.push_back(parseExpr());
    } else if (t.text == "compl" || t.text == "qtrace" || t.text == "itrace" ||
               t.text == "card" || topOp || idlOp) {
      node->args.push_back(parseExpr());
    } else {
      throw ParseError("unknown identifier '" + t.text + "'", t.pos);
    }
    expectPunct(")");
    return node;
  }

  Lexer lex_;
};

// ---- Evaluator ----

RealSet evalSet(const ExprNode& n);

RealSet evalSetArg(const ExprNode& n, std::size_t i) {
  return evalSet(*n.args.at(i));
}

RealSet evalSet(const ExprNode& n) {
  if (n.head == "R") return RealSet::full();
  if (n.head == "Q") return RealSet::rationals();
  if (n.head == "I") return RealSet::irrationals();
  if (n.head == "Z") return RealSet::integers();
  if (n.head == "N") return RealSet::naturals();
  if (n.head == "empty") return RealSet::empty();
  if (n.head == "interval") {
    return RealSet::interval(n.numbers[0], n.numbers[1], n.closedFlags[0],
                             n.closedFlags[1]);
  }
  if (n.head == "points") {
    std::vector<Rational> pts;
    for (const ExtRational& v : n.numbers) pts.push_back(v.value());
    return RealSet::points(std::move(pts));
  }
  if (n.head == "prog") {
    Progression p;
    p.anchor = n.numbers[0].value();
    p.step = n.numbers[1].value();
    p.kind = n.progKind == "up"     ? Progression::Kind::Up
             : n.progKind == "down" ? Progression::Kind::Down
                                    : Progression::Kind::Full;
    return RealSet::progression(p);
  }
  if (n.head == "qtrace") {
    return RealSet::rationals().intersect(evalSetArg(n, 0));
  }
  if (n.head == "itrace") {
    return RealSet::irrationals().intersect(evalSetArg(n, 0));
  }
  if (n.head == "union" || n.head == "inter") {
    RealSet acc = evalSetArg(n, 0);
    for (std::size_t i = 1; i < n.args.size(); ++i) {
      acc = n.head == "union" ? acc.unionWith(evalSetArg(n, i))
                              : acc.intersect(evalSetArg(n, i));
    }
    return acc;
  }
  if (n.head == "setminus") return evalSetArg(n, 0).minus(evalSetArg(n, 1));
  if (n.head == "compl") return evalSetArg(n, 0).complement();

  const Topology t = topologyFromSelector(n.topologySelector);
  const RealSet s = evalSetArg(n, 0);
  if (n.head == "int") return t.interior(s);
  if (n.head == "cl") return t.closure(s);
  if (n.head == "fr") return t.frontier(s);
  if (n.head == "D") return t.derivedSet(s);

  const IdealKind k = idealFromSelector(n.idealSelector);
  if (n.head == "intC") return idealInterior(t, k, s);
  if (n.head == "clC") return idealClosure(t, k, s);
  if (n.head == "DC") return idealDerived(t, k, s);
  if (n.head == "BdC") return idealBorder(t, k, s);
  if (n.head == "FrC") return idealFrontier(t, k, s);
  if (n.head == "ExtC") return idealExterior(t, k, s);
  throw std::logic_error("unreachable expression head " + n.head);
}

// ---- Renderer ----

std::string renderExt(const ExtRational& v) {
  if (v.isNegInf()) return "-inf";
  if (v.isPosInf()) return "inf";
  return toString(v.value());
}

std::string renderSimple(const SimpleSet& s) {
  if (s.isFull()) return "R";
  std::vector<std::string> parts;
  for (const Component& c : s.components()) {
    parts.push_back("interval(" + renderExt(c.lo) + "," + renderExt(c.hi) +
                    "," + (c.loClosed ? "c" : "o") + "," +
                    (c.hiClosed ? "c" : "o") + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string out = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? "," : "") + parts[i];
  }
  return out + ")";
}

std::string renderDiscrete(const DiscreteSet& d) {
  std::vector<std::string> parts;
  for (const Progression& p : d.progressions()) {
    std::string kind = p.kind == Progression::Kind::Up     ? ",up"
                       : p.kind == Progression::Kind::Down ? ",down"
                                                           : "";
    parts.push_back("prog(" + toString(p.anchor) + "," + toString(p.step) +
                    kind + ")");
  }
  if (!d.points().empty()) {
    std::string pts = "points(";
    for (std::size_t i = 0; i < d.points().size(); ++i) {
      pts += (i ? "," : "") + toString(d.points()[i]);
    }
    parts.push_back(pts + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string out = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? "," : "") + parts[i];
  }
  return out + ")";
}

}  // namespace

Expression parseExpression(const std::string& src) {
  Parser p(src);
  return Expression{p.parse()};
}

std::string renderSet(const RealSet& s) {
  if (s.isEmpty()) return "empty";
  if (s.isFull()) return "R";
  if (s == RealSet::rationals()) return "Q";
  if (s == RealSet::irrationals()) return "I";
  std::vector<std::string> parts;
  if (!s.qIntervals().isEmpty()) {
    std::string q = "qtrace(" + renderSimple(s.qIntervals()) + ")";
    if (!s.qMinus().isEmpty()) {
      q = "setminus(" + q + "," + renderDiscrete(s.qMinus()) + ")";
    }
    parts.push_back(std::move(q));
  }
  if (!s.qPlus().isEmpty()) parts.push_back(renderDiscrete(s.qPlus()));
  if (!s.iIntervals().isEmpty()) {
    parts.push_back("itrace(" + renderSimple(s.iIntervals()) + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string out = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? "," : "") + parts[i];
  }
  return out + ")";
}

std::string renderValue(const std::variant<RealSet, bool, Cardinality>& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const Cardinality* c = std::get_if<Cardinality>(&v)) {
    switch (*c) {
      case Cardinality::Finite: return "finite";
      case Cardinality::CountablyInfinite: return "countably-infinite";
      case Cardinality::Uncountable: return "uncountable";
    }
  }
  return renderSet(std::get<RealSet>(v));
}

EvalResult evaluate(const Expression& e) {
  const ExprNode& n = *e.root;
  std::variant<RealSet, bool, Cardinality> value;
  if (n.head == "isCopen" || n.head == "isCclosed") {
    const Topology t = topologyFromSelector(n.topologySelector);
    const IdealKind k = idealFromSelector(n.idealSelector);
    const IdealClassifyResult r = idealClassify(t, k, evalSet(*n.args[0]));
    value = n.head == "isCopen" ? r.isIdealOpen : r.isIdealClosed;
  } else if (n.head == "card") {
    value = evalSet(*n.args[0]).cardinality();
  } else {
    value = evalSet(n);
  }
  return {value, renderValue(value)};
}

Topology topologyFromSelector(const std::string& selector) {
  if (selector == "usual") return Topology::usual();
  if (selector == "cocountable") return Topology::cocountable();
  if (selector == "overlap") return Topology::overlappingInterval();
  const std::size_t colon = selector.find(':');
  if (colon != std::string::npos) {
    const std::string name = selector.substr(0, colon);
    const std::string param = selector.substr(colon + 1);
    if (name == "particular") return Topology::particularPoint(parseRational(param));
    if (name == "excluded") {
      if (param == "I") return Topology::excludedSet(RealSet::irrationals());
      if (param == "Q") return Topology::excludedSet(RealSet::rationals());
      throw std::invalid_argument("excluded set selector must be I or Q");
    }
  }
  throw std::invalid_argument("unknown topology selector '" + selector + "'");
}

IdealKind idealFromSelector(const std::string& selector) {
  if (selector == "finite") return IdealKind::Finite;
  if (selector == "countable") return IdealKind::Countable;
  throw std::invalid_argument("unknown ideal selector '" + selector + "'");
}

RealSet parseBracketInterval(const std::string& text) {
  if (text.size() < 3) throw ParseError("interval text too short", 1);
  const char open = text.front(), close = text.back();
  if (open != '[' && open != '(') {
    throw ParseError("expected '[' or '('", 1);
  }
  if (close != ']' && close != ')') {
    throw ParseError("expected ']' or ')'", text.size());
  }
  const std::string body = text.substr(1, text.size() - 2);
  const std::size_t comma = body.find(',');
  if (comma == std::string::npos) {
    throw ParseError("expected ',' between endpoints", 2);
  }
  auto endpoint = [&](const std::string& part,
                      std::size_t at) -> ExtRational {
    if (part == "inf" || part == "+inf") return ExtRational::posInf();
    if (part == "-inf") return ExtRational::negInf();
    try {
      return ExtRational(parseRational(part));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  };
  const ExtRational lo = endpoint(body.substr(0, comma), 2);
  const ExtRational hi = endpoint(body.substr(comma + 1), comma + 3);
  return RealSet::interval(lo, hi, open == '[', close == ']');
}

}  // namespace ctopo
