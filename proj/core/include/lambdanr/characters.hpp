#pragma once

// Finite groups as power-map tables and class functions over exact rings.
//
// A group is stored as its conjugacy classes, the order of a representative
// of each class and the class of every power of that representative. That
// is all the Adams/lambda machinery needs: psi^n evaluates through the
// power map, the per-class lambda series is recovered from the ghost vector
// a_k = chi(g^k), and the necklace side is Moebius inversion of the same
// data. Symmetric groups are kept desk-scale by working with partitions,
// never with n! elements.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lambdanr/lambda_series.hpp"
#include "lambdanr/necklace.hpp"
#include "lambdanr/scalar.hpp"

namespace lambdanr {

struct GroupSpec {
  enum class Kind { cyclic, symmetric, product };
  Kind kind = Kind::cyclic;
  int n = 1;  // cyclic/symmetric size
  std::vector<GroupSpec> factors;
};

class PowerGroup {
public:
  struct ClassInfo {
    i64 order = 1;
    std::vector<int> power_map;  // length `order`; power_map[k] = class of g^k
    std::string label;
  };

  int class_count() const { return static_cast<int>(classes_.size()); }
  const ClassInfo& cls(int c) const { return classes_.at(static_cast<size_t>(c)); }
  i64 exponent() const { return exponent_; }
  const GroupSpec& spec() const { return spec_; }

  // Class of g^k for a representative g of class c; k is reduced mod the
  // class order, so any k >= 0 is fine.
  int power_class(int c, i64 k) const {
    const auto& ci = cls(c);
    return ci.power_map[static_cast<size_t>(k % ci.order)];
  }

  // Index of the class with a given symmetric-group cycle type
  // (descending parts); symmetric groups only.
  int class_of_partition(const std::vector<int>& parts) const;
  const std::vector<int>& partition_of_class(int c) const;

  friend std::shared_ptr<const PowerGroup> cyclic_group(int n);
  friend std::shared_ptr<const PowerGroup> symmetric_group(int n);
  friend std::shared_ptr<const PowerGroup> product_group(
      std::shared_ptr<const PowerGroup> a, std::shared_ptr<const PowerGroup> b);

private:
  std::vector<ClassInfo> classes_;
  i64 exponent_ = 1;
  GroupSpec spec_;
  std::vector<std::vector<int>> partitions_;  // symmetric groups only
};

using GroupPtr = std::shared_ptr<const PowerGroup>;

// Z/n with classes g^0..g^{n-1} in exponent order.
GroupPtr cyclic_group(int n);
// S_n with classes the partitions of n, [1^n] first; n <= 12.
GroupPtr symmetric_group(int n);
// Classes are lexicographic pairs, orders are lcms, power maps act
// componentwise.
GroupPtr product_group(GroupPtr a, GroupPtr b);

class ClassFunction {
public:
  ClassFunction(GroupPtr group, Ring ring, std::vector<Scalar> values);

  const GroupPtr& group() const { return group_; }
  const Ring& ring() const { return ring_; }
  const Scalar& value(int c) const { return values_.at(static_cast<size_t>(c)); }
  const std::vector<Scalar>& values() const { return values_; }

private:
  GroupPtr group_;
  Ring ring_;
  std::vector<Scalar> values_;
};

// psi^n(chi)(g) = chi(g^n).
ClassFunction cf_adams(const ClassFunction& chi, i64 n);

// lambda^0..lambda^max as class functions (per-class Newton recursion
// through the ghost components psi^k).
std::vector<ClassFunction> cf_lambda_powers(const ClassFunction& chi, i64 max_i);

// The per-class generating series lambda_t(chi)(g) to the given order.
LambdaSeries cf_lambda_series_at(const ClassFunction& chi, int c, i64 order);

struct NecklaceAtResult {
  NeckVec vec;          // sparse exact, or truncated fallback
  bool integer_valued;  // false <=> the truncated fallback was taken
};

// Exponent vector of lambda_t(chi)(g): exact sparse on divisors of O(g)
// whenever the restriction of chi to <g> is integer-valued (ghost vector in
// the image of T_{O(g)}); otherwise truncated to fallback_order.
NecklaceAtResult cf_necklace_at(const ClassFunction& chi, int c,
                                i64 fallback_order = 16);

// The global finite product form: exponent alpha_d as a ClassFunction for
// every divisor d of the exponent e; requires an integer-valued character.
std::map<i64, ClassFunction> cf_necklace_global(const ClassFunction& chi);

struct IntegerValuedVerdict {
  bool integer_valued = false;
  bool values_integral = false;    // (a) every value is a rational integer
  bool adams_stable = false;       // (b) psi^n = psi^{gcd(n,e)} for all n
  bool necklace_sparse = false;    // (c) every class yields a sparse vector
  bool agree = false;
};

// Runs the three detectors and checks unanimity; internal_disagreement if
// they differ (possible only for class functions that are not virtual
// characters).
IntegerValuedVerdict cf_is_integer_valued(const ClassFunction& chi);

// chi1 x chi2 on the product group.
ClassFunction cf_product(const ClassFunction& chi1, const ClassFunction& chi2);

// Restriction to <g> as a class function on the cyclic group of order O(g).
ClassFunction cf_restrict_cyclic(const ClassFunction& chi, int c);

// Natural permutation character of S_n: fixed-point counts per class.
ClassFunction cf_perm_character_sn(int n);

// Validated constructor (length_mismatch on a wrong value count).
ClassFunction cf_from_values(GroupPtr group, Ring ring,
                             std::vector<Scalar> values);

bool cf_equal(const ClassFunction& a, const ClassFunction& b);

}  // namespace lambdanr
