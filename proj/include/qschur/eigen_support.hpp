#pragma once

#include <Eigen/Core>

#include "qschur/field.hpp"
#include "qschur/laurent.hpp"
#include "qschur/ratfunc.hpp"

namespace qschur::detail {

template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace qschur::detail

namespace Eigen {

template <>
struct NumTraits<qschur::Rational> : qschur::detail::ExactNumTraits<qschur::Rational> {};
template <>
struct NumTraits<qschur::LaurentPoly> : qschur::detail::ExactNumTraits<qschur::LaurentPoly> {};
template <>
struct NumTraits<qschur::RatFunc> : qschur::detail::ExactNumTraits<qschur::RatFunc> {};
template <>
struct NumTraits<qschur::CycloValue> : qschur::detail::ExactNumTraits<qschur::CycloValue> {};
template <>
struct NumTraits<qschur::FieldValue> : qschur::detail::ExactNumTraits<qschur::FieldValue> {};

}  // namespace Eigen

namespace qschur {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using LaurentMatrix = Mat<LaurentPoly>;
using FieldMatrix = Mat<FieldValue>;
using IntMatrix = Eigen::MatrixXi;
using IntVector = Eigen::VectorXi;

}  // namespace qschur
