#pragma once

#include "cxosc/basis.hpp"
#include "cxosc/diffop.hpp"
#include "cxosc/params.hpp"

namespace cxosc {

/// Acts with an operator on P exp(G), G = -a z zbar - b zbar^2, returning the
/// new polynomial part. Conjugating through the envelope turns d_z into
/// d_z - a zbar and d_zbar into d_zbar - a z - 2b zbar.
template <Scalar F>
ReducedFn<F> apply(const Params<F>& p, const DiffOp<F>& op, const ReducedFn<F>& f);

/// e^{-G} op e^{G} as an operator on polynomial parts.
template <Scalar F>
DiffOp<F> conjugate_by_envelope(const Params<F>& p, const DiffOp<F>& op);

}  // namespace cxosc
