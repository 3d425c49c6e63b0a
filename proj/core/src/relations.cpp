#include "cxosc/relations.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace cxosc {

namespace {

struct NamedOp {
  ExprOp op;
  std::string_view text;
};
constexpr NamedOp kOps[] = {
    {ExprOp::add, "+"}, {ExprOp::sub, "-"},    {ExprOp::mul, "*"},
    {ExprOp::div, "/"}, {ExprOp::comm, "comm"}, {ExprOp::acomm, "acomm"},
};

struct NamedWeyl {
  WeylAtom atom;
  std::string_view text;
};
constexpr NamedWeyl kWeyl[] = {
    {WeylAtom::z, "z"}, {WeylAtom::zbar, "zb"}, {WeylAtom::d_z, "dz"}, {WeylAtom::d_zbar, "dzb"}};

struct NamedParam {
  ParamAtom atom;
  std::string_view text;
};
constexpr NamedParam kParams[] = {{ParamAtom::a, "a"},
                                  {ParamAtom::b, "b"},
                                  {ParamAtom::sqrt_a, "sqrt_a"},
                                  {ParamAtom::sqrt_b, "sqrt_b"},
                                  {ParamAtom::i, "i"}};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string_view next() {
    skip_space();
    if (pos_ >= text_.size()) throw CatalogError("unexpected end of expression");
    if (text_[pos_] == '(' || text_[pos_] == ')') return text_.substr(pos_++, 1);
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool looks_numeric(std::string_view tok) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  return i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]));
}

Expr parse_atom(std::string_view tok) {
  if (looks_numeric(tok)) {
    try {
      return {GaussRational::parse(tok)};
    } catch (const std::invalid_argument& e) {
      throw CatalogError(e.what());
    }
  }
  for (const auto& w : kWeyl) {
    if (w.text == tok) return {w.atom};
  }
  for (const auto& p : kParams) {
    if (p.text == tok) return {p.atom};
  }
  if (auto g = parse_generator(tok)) return {*g};
  throw CatalogError("unknown atom '" + std::string(tok) + "'");
}

Expr parse_expr(Lexer& lex) {
  std::string_view tok = lex.next();
  if (tok == ")") throw CatalogError("unexpected ')'");
  if (tok != "(") return parse_atom(tok);

  std::string_view head = lex.next();
  const NamedOp* op = nullptr;
  for (const auto& candidate : kOps) {
    if (candidate.text == head) op = &candidate;
  }
  if (!op) throw CatalogError("unknown operator '" + std::string(head) + "'");

  ExprCall call{op->op, {}};
  for (;;) {
    // Peek by re-lexing: a ')' closes the call.
    Lexer probe = lex;
    if (probe.next() == ")") {
      lex = probe;
      break;
    }
    call.args.push_back(parse_expr(lex));
  }

  const std::size_t n = call.args.size();
  switch (call.op) {
    case ExprOp::add:
    case ExprOp::mul:
      if (n < 1) throw CatalogError("'" + std::string(op->text) + "' needs at least one argument");
      break;
    case ExprOp::sub:
      if (n != 1 && n != 2) throw CatalogError("'-' takes one or two arguments");
      break;
    case ExprOp::div:
    case ExprOp::comm:
    case ExprOp::acomm:
      if (n != 2) throw CatalogError("'" + std::string(op->text) + "' takes two arguments");
      break;
  }
  return {std::move(call)};
}

std::string_view op_text(ExprOp op) {
  for (const auto& candidate : kOps) {
    if (candidate.op == op) return candidate.text;
  }
  return "?";
}

template <Scalar F>
F param_value(ParamAtom atom, const Params<F>& p) {
  switch (atom) {
    case ParamAtom::a:
      return p.a();
    case ParamAtom::b:
      return p.b();
    case ParamAtom::sqrt_a:
      return p.root_a();
    case ParamAtom::sqrt_b:
      return p.root_b();
    case ParamAtom::i:
      if constexpr (std::same_as<F, Exact>) {
        return Exact::imaginary_unit();
      } else {
        return Float{0.0, 1.0};
      }
  }
  return F{};
}

template <Scalar F>
F literal_value(const GaussRational& q) {
  if constexpr (std::same_as<F, Exact>) {
    return q;
  } else {
    return to_float(q);
  }
}

// Scalars stay scalars until they meet an operator.
template <Scalar F>
using Value = std::variant<F, DiffOp<F>>;

template <Scalar F>
DiffOp<F> as_operator(Value<F> v) {
  if (auto* c = std::get_if<F>(&v)) return DiffOp<F>::scalar(*c);
  return std::get<DiffOp<F>>(std::move(v));
}

template <Scalar F>
Value<F> add(Value<F> lhs, const Value<F>& rhs, bool subtract) {
  if (std::holds_alternative<F>(lhs) && std::holds_alternative<F>(rhs)) {
    F r = std::get<F>(rhs);
    return subtract ? F(std::get<F>(lhs) - r) : F(std::get<F>(lhs) + r);
  }
  DiffOp<F> l = as_operator<F>(std::move(lhs));
  DiffOp<F> r = as_operator<F>(rhs);
  return subtract ? l - r : l + r;
}

template <Scalar F>
Value<F> multiply(Value<F> lhs, const Value<F>& rhs) {
  const F* lc = std::get_if<F>(&lhs);
  const F* rc = std::get_if<F>(&rhs);
  if (lc && rc) return F(*lc * *rc);
  if (lc) return *lc * std::get<DiffOp<F>>(rhs);
  if (rc) return std::get<DiffOp<F>>(lhs) * *rc;
  return std::get<DiffOp<F>>(lhs) * std::get<DiffOp<F>>(rhs);
}

template <Scalar F>
Value<F> eval(const Expr& expr, const OperatorCatalog<F>& catalog) {
  return std::visit(
      [&](const auto& node) -> Value<F> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::same_as<T, Generator>) {
          return catalog[node];
        } else if constexpr (std::same_as<T, WeylAtom>) {
          switch (node) {
            case WeylAtom::z:
              return DiffOp<F>::z();
            case WeylAtom::zbar:
              return DiffOp<F>::zbar();
            case WeylAtom::d_z:
              return DiffOp<F>::d_z();
            case WeylAtom::d_zbar:
              return DiffOp<F>::d_zbar();
          }
          return DiffOp<F>{};
        } else if constexpr (std::same_as<T, ParamAtom>) {
          return param_value(node, catalog.params());
        } else if constexpr (std::same_as<T, GaussRational>) {
          return literal_value<F>(node);
        } else {
          const auto& args = node.args;
          switch (node.op) {
            case ExprOp::add: {
              Value<F> acc = eval(args[0], catalog);
              for (std::size_t i = 1; i < args.size(); ++i) acc = add<F>(std::move(acc), eval(args[i], catalog), false);
              return acc;
            }
            case ExprOp::sub: {
              if (args.size() == 1) return multiply<F>(from_integer<F>(-1), eval(args[0], catalog));
              return add<F>(eval(args[0], catalog), eval(args[1], catalog), true);
            }
            case ExprOp::mul: {
              Value<F> acc = eval(args[0], catalog);
              for (std::size_t i = 1; i < args.size(); ++i) acc = multiply<F>(std::move(acc), eval(args[i], catalog));
              return acc;
            }
            case ExprOp::div: {
              Value<F> den = eval(args[1], catalog);
              const F* d = std::get_if<F>(&den);
              if (!d) throw CatalogError("division by an operator");
              if (is_zero(*d)) throw CatalogError("division by zero");
              return multiply<F>(eval(args[0], catalog), F(from_integer<F>(1) / *d));
            }
            case ExprOp::comm:
              return commutator(as_operator<F>(eval(args[0], catalog)), as_operator<F>(eval(args[1], catalog)));
            case ExprOp::acomm:
              return anticommutator(as_operator<F>(eval(args[0], catalog)), as_operator<F>(eval(args[1], catalog)));
          }
          return F{};
        }
      },
      expr.node);
}

}  // namespace

Expr parse_expression(std::string_view text) {
  Lexer lex(text);
  Expr e = parse_expr(lex);
  if (!lex.at_end()) throw CatalogError("trailing input after expression");
  return e;
}

std::string to_string(const Expr& expr) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::same_as<T, Generator>) {
          return std::string(name(node));
        } else if constexpr (std::same_as<T, WeylAtom>) {
          for (const auto& w : kWeyl) {
            if (w.atom == node) return std::string(w.text);
          }
          return "?";
        } else if constexpr (std::same_as<T, ParamAtom>) {
          for (const auto& p : kParams) {
            if (p.atom == node) return std::string(p.text);
          }
          return "?";
        } else if constexpr (std::same_as<T, GaussRational>) {
          return to_string(node);
        } else {
          std::string out = "(" + std::string(op_text(node.op));
          for (const auto& arg : node.args) out += " " + to_string(arg);
          return out + ")";
        }
      },
      expr.node);
}

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::commutator:
      return "commutator";
    case RelationKind::anticommutator:
      return "anticommutator";
    case RelationKind::identity:
      return "identity";
  }
  return "?";
}

std::vector<RelationSpec> parse_catalog(std::istream& in, std::string_view source) {
  std::vector<RelationSpec> specs;
  std::set<std::string> ids;
  bool header_seen = false;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> CatalogError {
    return CatalogError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.back()))) view.remove_suffix(1);
    std::size_t first = view.find_first_not_of(" \t");
    if (first == std::string_view::npos || view[first] == '#') continue;
    view.remove_prefix(first);

    if (!header_seen) {
      if (view != kCatalogHeader) throw fail("expected header '" + std::string(kCatalogHeader) + "'");
      header_seen = true;
      continue;
    }

    std::istringstream fields{std::string(view)};
    RelationSpec spec;
    std::string kind;
    if (!(fields >> spec.id >> kind >> spec.anchor)) throw fail("expected '<id> <kind> <anchor> <lhs> <rhs>'");
    if (kind == "commutator") {
      spec.kind = RelationKind::commutator;
    } else if (kind == "anticommutator") {
      spec.kind = RelationKind::anticommutator;
    } else if (kind == "identity") {
      spec.kind = RelationKind::identity;
    } else {
      throw fail("unknown relation kind '" + kind + "'");
    }
    if (!ids.insert(spec.id).second) throw fail("duplicate relation id '" + spec.id + "'");

    std::string rest;
    std::getline(fields, rest);
    try {
      Lexer lex(rest);
      spec.lhs = parse_expr(lex);
      spec.rhs = parse_expr(lex);
      if (!lex.at_end()) throw CatalogError("trailing input after rhs");
    } catch (const CatalogError& e) {
      throw fail(e.what());
    }

    auto bracket = std::get_if<ExprCall>(&spec.lhs.node);
    if (spec.kind == RelationKind::commutator && (!bracket || bracket->op != ExprOp::comm)) {
      throw fail("commutator relation must have a (comm ...) lhs");
    }
    if (spec.kind == RelationKind::anticommutator && (!bracket || bracket->op != ExprOp::acomm)) {
      throw fail("anticommutator relation must have an (acomm ...) lhs");
    }
    specs.push_back(std::move(spec));
  }
  if (!header_seen) throw CatalogError(std::string(source) + ": empty catalog (missing header)");
  return specs;
}

std::vector<RelationSpec> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open relation catalog " + path.string());
  return parse_catalog(in, path.string());
}

template <Scalar F>
DiffOp<F> evaluate(const Expr& expr, const OperatorCatalog<F>& catalog) {
  return as_operator<F>(eval(expr, catalog));
}

template DiffOp<Exact> evaluate(const Expr&, const OperatorCatalog<Exact>&);
template DiffOp<Float> evaluate(const Expr&, const OperatorCatalog<Float>&);

}  // namespace cxosc
