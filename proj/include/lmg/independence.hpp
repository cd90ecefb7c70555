#ifndef LMG_INDEPENDENCE_HPP
#define LMG_INDEPENDENCE_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <lmg/graph.hpp>
#include <lmg/separation.hpp>

namespace lmg {

/// Subset of a model's ground set; bit k is the k-th ground element.
using Mask = std::uint32_t;

/// <A, B | C> over a ground set, as three pairwise disjoint masks.
struct Statement {
    Mask a = 0;
    Mask b = 0;
    Mask c = 0;

    Statement mirrored() const { return {b, a, c}; }
    bool trivial() const { return a == 0 || b == 0; }

    friend bool operator==(const Statement&, const Statement&) = default;
    friend auto operator<=>(const Statement&, const Statement&) = default;
};

enum class Axiom { Symmetry, Decomposition, WeakUnion, Contraction, Intersection, Composition };

const char* to_string(Axiom a);
inline constexpr Axiom all_axioms[] = {Axiom::Symmetry,     Axiom::Decomposition, Axiom::WeakUnion,
                                       Axiom::Contraction,  Axiom::Intersection,  Axiom::Composition};

class AxiomSet {
public:
    constexpr AxiomSet() = default;
    constexpr AxiomSet(std::initializer_list<Axiom> axioms) {
        for (Axiom a : axioms) bits_ |= bit(a);
    }
    constexpr bool contains(Axiom a) const { return (bits_ & bit(a)) != 0; }
    constexpr AxiomSet with(Axiom a) const {
        AxiomSet s = *this;
        s.bits_ |= bit(a);
        return s;
    }
    constexpr AxiomSet without(Axiom a) const {
        AxiomSet s = *this;
        s.bits_ &= static_cast<std::uint8_t>(~bit(a));
        return s;
    }
    std::vector<Axiom> members() const;
    friend constexpr bool operator==(AxiomSet, AxiomSet) = default;

private:
    static constexpr std::uint8_t bit(Axiom a) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(a)); }
    std::uint8_t bits_ = 0;
};

inline constexpr AxiomSet semi_graphoid{Axiom::Symmetry, Axiom::Decomposition, Axiom::WeakUnion, Axiom::Contraction};
inline constexpr AxiomSet graphoid = semi_graphoid.with(Axiom::Intersection);
inline constexpr AxiomSet compositional_graphoid = graphoid.with(Axiom::Composition);
inline constexpr AxiomSet compositional_semi_graphoid = semi_graphoid.with(Axiom::Composition);

/// Accepts semi-graphoid, graphoid, compositional-graphoid,
/// compositional-semi-graphoid (underscores allowed) or a comma list of axiom
/// names. Throws std::invalid_argument otherwise.
AxiomSet parse_axiom_set(std::string_view text);

inline constexpr std::size_t max_ground_size = 12;

struct ModelLimits {
    std::size_t full_model = 6;
    std::size_t singleton_model = 8;
    std::size_t closure = 5;
};

/// Finite set of independence statements over a labelled ground set.
///
/// Statements with an empty side are members of every model and are never
/// stored. Stored statements keep their orientation, so a model need not be
/// symmetric; `is_symmetric` reports whether it is.
class IndependenceModel {
public:
    IndependenceModel() = default;
    /// `ground` is sorted; throws on duplicates or more than `max_ground_size` elements.
    explicit IndependenceModel(std::vector<std::string> ground);

    const std::vector<std::string>& ground() const { return ground_; }
    std::size_t ground_size() const { return ground_.size(); }
    Mask full_mask() const { return ground_.empty() ? 0 : static_cast<Mask>((1u << ground_.size()) - 1); }

    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;
    Statement statement(const std::vector<std::string>& a, const std::vector<std::string>& b,
                        const std::vector<std::string>& c) const;

    /// Throws std::invalid_argument unless the sides are disjoint subsets of the ground set.
    void validate(const Statement& s) const;

    bool contains(const Statement& s) const;
    /// Returns true if `s` was newly stored. Trivial statements are ignored.
    bool insert(const Statement& s);

    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    /// Stored statements, smallest (|A|+|B|, |C|) first, then by mask.
    std::vector<Statement> statements() const;

    bool is_symmetric() const;
    bool is_subset_of(const IndependenceModel& other) const;

    friend bool operator==(const IndependenceModel& x, const IndependenceModel& y) {
        return x.ground_ == y.ground_ && x.bits_ == y.bits_;
    }

private:
    std::size_t index(const Statement& s) const;

    std::vector<std::string> ground_;
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

/// `{i,k} _||_ {j} | {l}`, elements sorted, empty C as `{}`.
std::string format_statement(const IndependenceModel& model, const Statement& s);
/// Inverse of `format_statement`; a side may also be a bare label.
Statement parse_statement(const IndependenceModel& model, std::string_view text);

struct AxiomViolation {
    Axiom axiom = Axiom::Symmetry;
    std::vector<Statement> premises;  ///< present in the model
    Statement missing;                ///< implied but absent
};

/// Exhaustive check of one axiom over all disjoint A, B, C, D.
std::optional<AxiomViolation> check_axiom(const IndependenceModel& model, Axiom axiom);
std::optional<AxiomViolation> check_axioms(const IndependenceModel& model, AxiomSet axioms);

/// Least superset of `model` closed under the inference rules of `axioms`.
/// Throws LimitError when the ground set exceeds `ground_limit`.
IndependenceModel closure(const IndependenceModel& model, AxiomSet axioms, std::size_t ground_limit = ModelLimits{}.closure);

/// Statements of `model` whose sides avoid `removed`, over the ground set without it.
IndependenceModel marginal_model(const IndependenceModel& model, const std::vector<std::string>& removed);

/// J_m(G) by m-separation; with `singleton_only`, A and B are single nodes.
IndependenceModel enumerate_model(const MixedGraph& g, bool singleton_only, const ModelLimits& limits = {});

/// <i, j | (ant(i) ∪ ant(j)) \ {i, j}> and its mirror for each non-adjacent pair.
IndependenceModel pairwise_model(const MixedGraph& g);

struct MarkovCheck {
    bool holds = true;
    std::optional<Statement> violation;  ///< a required statement missing from the model
};

MarkovCheck satisfies_pairwise(const IndependenceModel& model, const MixedGraph& g);
/// J_m(G) ⊆ model, using the full-model size limit.
MarkovCheck satisfies_global(const IndependenceModel& model, const MixedGraph& g, const ModelLimits& limits = {});

/// First statement that separates some adjacent pair, if any.
std::optional<Statement> first_nonconforming(const IndependenceModel& model, const MixedGraph& g);
bool conforms(const IndependenceModel& model, const MixedGraph& g);

/// Equal singleton m-separation models. Throws on differing node sets.
bool markov_equivalent(const MixedGraph& g1, const MixedGraph& g2, const ModelLimits& limits = {});

}  // namespace lmg

#endif
