#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cxosc/diffop.hpp"
#include "cxosc/operators.hpp"

namespace cxosc {

// Relation catalog files are line oriented:
//
//   cxosc-relations 1
//   # comment
//   <id> <kind> <anchor> <lhs> <rhs>
//
// kind is commutator, anticommutator or identity. Expressions use a prefix
// grammar:
//
//   expr := atom | "(" op expr+ ")"
//   op   := + | - | * | / | comm | acomm
//   atom := catalog name (H, A+, J0, D-12, ...) | z | zb | dz | dzb
//         | rational literal (3, -1/2) | a | b | sqrt_a | sqrt_b | i
//
// A scalar in operator position stands for that multiple of the identity.

inline constexpr std::string_view kCatalogHeader = "cxosc-relations 1";

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WeylAtom { z, zbar, d_z, d_zbar };
enum class ParamAtom { a, b, sqrt_a, sqrt_b, i };
enum class ExprOp { add, sub, mul, div, comm, acomm };

struct Expr;

struct ExprCall {
  ExprOp op;
  std::vector<Expr> args;
};

struct Expr {
  std::variant<Generator, WeylAtom, ParamAtom, GaussRational, ExprCall> node;
};

Expr parse_expression(std::string_view text);
std::string to_string(const Expr& expr);

enum class RelationKind { commutator, anticommutator, identity };

std::string_view to_string(RelationKind kind);

/// One catalog entry: lhs == rhs must hold as an operator identity.
struct RelationSpec {
  std::string id;
  RelationKind kind;
  std::string anchor;
  Expr lhs;
  Expr rhs;
};

/// Parses a catalog stream; `source` names it in error messages.
/// Throws CatalogError on syntax errors, duplicate ids, a missing header, or
/// a kind that disagrees with the lhs bracket.
std::vector<RelationSpec> parse_catalog(std::istream& in, std::string_view source = "<stream>");
std::vector<RelationSpec> load_catalog(const std::filesystem::path& path);

/// Evaluates an expression to an operator for the catalog's parameters.
template <Scalar F>
DiffOp<F> evaluate(const Expr& expr, const OperatorCatalog<F>& catalog);

}  // namespace cxosc
