#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cxosc/diffop.hpp"
#include "cxosc/params.hpp"

namespace cxosc {

/// Every named operator of the model.
enum class Generator {
  H,
  A_plus,
  A_minus,
  B_plus,
  B_minus,
  R,
  S,
  T,
  U,
  J0,
  J_plus,
  J_minus,
  K,
  a1_plus,
  a1_minus,
  a2_plus,
  a2_minus,
  D_plus_11,
  D_plus_12,
  D_plus_22,
  D_minus_11,
  D_minus_12,
  D_minus_22,
  E11,
  E12,
  E21,
  E22,
};

inline constexpr std::array kAllGenerators = {
    Generator::H,          Generator::A_plus,     Generator::A_minus,    Generator::B_plus,
    Generator::B_minus,    Generator::R,          Generator::S,          Generator::T,
    Generator::U,          Generator::J0,         Generator::J_plus,     Generator::J_minus,
    Generator::K,          Generator::a1_plus,    Generator::a1_minus,   Generator::a2_plus,
    Generator::a2_minus,   Generator::D_plus_11,  Generator::D_plus_12,  Generator::D_plus_22,
    Generator::D_minus_11, Generator::D_minus_12, Generator::D_minus_22, Generator::E11,
    Generator::E12,        Generator::E21,        Generator::E22,
};

/// The osp(1/4) generators that have an explicit z, zbar transcription.
inline constexpr std::array kExplicitFormGenerators = {
    Generator::a1_plus,    Generator::a1_minus,   Generator::a2_plus,    Generator::a2_minus,
    Generator::J0,         Generator::J_plus,     Generator::J_minus,    Generator::K,
    Generator::D_plus_11,  Generator::D_plus_12,  Generator::D_plus_22,  Generator::D_minus_11,
    Generator::D_minus_12, Generator::D_minus_22,
};

/// Catalog spelling: "H", "A+", "B-", "J0", "J+", "a1+", "D+12", "E21", ...
std::string_view name(Generator g);
std::optional<Generator> parse_generator(std::string_view text);

/// Builds a catalog operator. H and A+-, B+- come from their defining
/// formulas; everything else is composed from those four ladder operators.
template <Scalar F>
DiffOp<F> make_operator(const Params<F>& p, Generator g);

/// Name lookup; throws std::invalid_argument for unknown names.
template <Scalar F>
DiffOp<F> make_operator(const Params<F>& p, std::string_view name);

/// Direct z, zbar transcription of an osp(1/4) generator, independent of
/// make_operator. Throws std::invalid_argument for names outside
/// kExplicitFormGenerators.
template <Scalar F>
DiffOp<F> explicit_form(const Params<F>& p, Generator g);

template <Scalar F>
DiffOp<F> explicit_form(const Params<F>& p, std::string_view name);

/// All catalog operators built once for a parameter point.
template <Scalar F>
class OperatorCatalog {
 public:
  explicit OperatorCatalog(const Params<F>& p);

  const Params<F>& params() const { return params_; }
  const DiffOp<F>& operator[](Generator g) const { return ops_[static_cast<std::size_t>(g)]; }

 private:
  Params<F> params_;
  std::array<DiffOp<F>, kAllGenerators.size()> ops_;
};

extern template class OperatorCatalog<Exact>;
extern template class OperatorCatalog<Float>;

}  // namespace cxosc
