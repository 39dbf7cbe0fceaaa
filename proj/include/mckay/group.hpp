#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mckay/group_spec.hpp"

namespace mckay {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its Cayley table. Element 0 is always the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::string carrier, int order, std::vector<int> table, std::vector<std::string> names,
              std::vector<int> generators);

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int power(int g, std::int64_t t) const;
  /// g^-1 x g.
  int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }
  int element_order(int g) const { return orders_[static_cast<std::size_t>(g)]; }

  const std::string& carrier() const { return carrier_; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::span<const int> generators() const { return generators_; }
  std::span<const int> table() const { return table_; }

  /// Surjection onto a base group (first factor of a product, acting group of a
  /// semidirect product); empty when the group was not built that way.
  const GroupPtr& base() const { return base_; }
  int to_base(int g) const { return to_base_[static_cast<std::size_t>(g)]; }
  /// Elements of the kernel of to_base, sorted.
  std::span<const int> base_kernel() const { return base_kernel_; }
  void set_base(GroupPtr base, std::vector<int> to_base, std::vector<int> kernel);

 private:
  std::string carrier_;
  int n_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<std::string> names_;
  std::vector<int> generators_;
  GroupPtr base_;
  std::vector<int> to_base_;
  std::vector<int> base_kernel_;
};

struct BuildOptions {
  int order_cap = 1024;
};

/// Builds and validates a group. Throws Error with OrderCapExceeded,
/// ClosureDiverged or InvalidAction.
GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options = {});
GroupPtr build_group(std::string_view spec_text, const BuildOptions& options = {});

/// Throws std::logic_error naming the first violated group axiom.
void validate_group(const FiniteGroup& g);

struct ConjugacyData {
  std::vector<std::vector<int>> classes;  // sorted; ordered by least element, so class 0 is {e}
  std::vector<int> class_of;
  std::vector<int> class_sizes;
  std::vector<int> representatives;  // least element of each class
  std::vector<int> inverse_class;
  std::vector<int> class_orders;
  int exponent = 1;
  std::vector<std::vector<int>> power_maps;  // power_maps[t][k] for t in [0, exponent)
  std::vector<int> center;
  std::vector<std::vector<int>> centralizers;  // of each representative, sorted

  int num_classes() const { return static_cast<int>(classes.size()); }
  int power_map(std::int64_t t, int k) const;
};

ConjugacyData conjugacy(const FiniteGroup& g);

class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> elements);

  const GroupPtr& parent() const { return parent_; }
  std::span<const int> elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool normal() const { return normal_; }
  bool contains(int g) const { return index_[static_cast<std::size_t>(g)] >= 0; }

  /// The subgroup as a group in its own right; element i is elements()[i].
  const GroupPtr& induced() const { return induced_; }
  int to_parent(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  /// -1 when g is not in the subgroup.
  int from_parent(int g) const { return index_[static_cast<std::size_t>(g)]; }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<int> index_;
  bool normal_;
  GroupPtr induced_;
};

/// Closes elems under multiplication and inversion.
Subgroup subgroup_from_elements(const GroupPtr& g, std::span<const int> elems);

struct Quotient {
  GroupPtr group;
  std::vector<int> projection;  // parent element -> coset index
};

/// G/N with cosets indexed in order of their least element. Throws Error(NotNormal).
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

/// An action of a group on an abelian kernel (cyclic:m or elemab:p:n): one
/// row-major matrix over the kernel's coefficient ring per acting generator.
struct KernelAction {
  std::vector<std::vector<int>> images;
  std::vector<int> kernel;  // acting elements that fix every kernel element, sorted
};

/// Every action of acting on kernel that is transitive on the nonzero kernel
/// elements, in enumeration order (generator images taken in odometer order,
/// first generator most significant). Throws Error(InvalidAction) when the
/// search space is too large to enumerate.
std::vector<KernelAction> transitive_actions(const FiniteGroup& acting, const GroupSpec& kernel);

/// Validates explicit generator images. Throws Error(InvalidAction).
KernelAction make_action(const FiniteGroup& acting, const GroupSpec& kernel, std::vector<std::vector<int>> images);

bool is_abelian(const FiniteGroup& g);
/// Number of elements of each order, indexed by order.
std::vector<int> order_statistics(const FiniteGroup& g);
/// Normal subgroups of the given order, as unions of conjugacy classes.
std::vector<Subgroup> normal_subgroups_of_order(const GroupPtr& g, const ConjugacyData& cd, int order);

}  // namespace mckay
