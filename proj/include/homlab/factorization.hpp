#pragma once

#include "homlab/count.hpp"
#include "homlab/homsearch.hpp"
#include "homlab/object.hpp"

#include <functional>
#include <string>
#include <vector>

namespace homlab {

enum class SubQuotKind { subobject, quotient };

std::string_view subquot_kind_name(SubQuotKind k);

/// A concrete subobject (carrier plus inclusion mono into the parent) or
/// quotient (carrier plus projection epi out of the parent).
struct SubQuotEntry {
  SubQuotKind kind = SubQuotKind::subobject;
  Object carrier;
  Morphism witness;
  bool proper = false;
  /// Human-readable support, e.g. "V={0,2} E={0-2}" or "blocks {0,1}{2}".
  std::string label;
};

struct FactorizationLimits {
  std::size_t max_subobject_vertices = 8;
  std::size_t max_partition_vertices = 12;
  std::size_t max_group_order = 64;
  /// Upper bound on the number of graph subobjects materialized at once.
  std::size_t max_entries = std::size_t{1} << 20;
};

// Subobjects: graphs, one per (vertex subset, edge subset inside it); groups,
// one per subgroup. Listed by carrier size, then by support.
// Quotients: graphs, one per partition of the vertex set (finest first,
// decreasing restricted-growth order), carrier on the blocks with the image edges; groups, one per normal
// subgroup N ordered by |N|, carrier G/N.
// Size bounds are enforced with CapabilityError.

using EntryVisitor = std::function<void(const SubQuotEntry&)>;

void for_each_subobject(const Graph& g, const EntryVisitor& visit, const FactorizationLimits& lim = {});
void for_each_subobject(const FiniteGroup& g, const EntryVisitor& visit,
                        const FactorizationLimits& lim = {});
void for_each_quotient(const Graph& g, const EntryVisitor& visit, const FactorizationLimits& lim = {});
void for_each_quotient(const FiniteGroup& g, const EntryVisitor& visit,
                       const FactorizationLimits& lim = {});

std::vector<SubQuotEntry> subobjects(const Object& o, const FactorizationLimits& lim = {});
std::vector<SubQuotEntry> quotients(const Object& o, const FactorizationLimits& lim = {});

/// Subgroups as sorted element lists, ordered by (size, elements).
std::vector<std::vector<Index>> all_subgroups(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const std::vector<Index>& subgroup);

/// Partial order on the entries of one parent. For subobjects s <= t when the
/// inclusion of s factors through t; for quotients q <= r when q factors
/// through r (q is a quotient of r), so the full object is the top element
/// in both cases.
class Poset {
 public:
  const std::vector<SubQuotEntry>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return rel_[i * elements_.size() + j] != 0; }

  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;
  /// Number of elements in a longest chain.
  std::size_t longest_chain() const;

 private:
  friend Poset build_poset(std::vector<SubQuotEntry> entries);
  std::vector<SubQuotEntry> elements_;
  std::vector<char> rel_;
};

/// Computes the factor-through relation and checks reflexivity,
/// antisymmetry and transitivity; a failure throws InternalError. Throws
/// InvalidArgument if the entries mix kinds or parents.
Poset build_poset(std::vector<SubQuotEntry> entries);

struct DecompositionSummand {
  std::string label;
  std::string carrier_key;  // hex canonical key, or a description when too large
  Count value;
};

struct DecompositionCheck {
  std::string orbit;  // OrbitSpec tag
  Count total;
  std::vector<DecompositionSummand> summands;
  Count sum;
  bool holds = false;
};

struct DecompositionReport {
  Side side = Side::left;
  std::vector<DecompositionCheck> checks;  // trivial action, then full automorphisms
  bool holds = false;
};

/// side left:  |Hom(c,d)/A| = sum over subobjects d' of d of |Epi(c,d')/A|,
///             A acting on c by precomposition.
/// side right: |Hom(c,d)/A| = sum over quotients c' of c of |Mono(c',d)/A|,
///             A acting on d by postcomposition.
/// Checked once with the trivial action and once with all automorphisms.
/// Summands are shared between isomorphic carriers.
DecompositionReport verify_decomposition(const Object& c, const Object& d, Side side,
                                         const FactorizationLimits& lim = {});

}  // namespace homlab
