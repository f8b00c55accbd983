#ifndef GENUSKIT_OPERAD_HPP
#define GENUSKIT_OPERAD_HPP

#include <string>
#include <utility>
#include <vector>

#include "genuskit/check.hpp"
#include "genuskit/pbn.hpp"

namespace genuskit::braid {

/// I = (i_1, ..., i_r); part s covers the consecutive strands block(s) of {1, ..., |I|}.
struct OrderedPartition {
    std::vector<int> parts;

    OrderedPartition() = default;
    explicit OrderedPartition(std::vector<int> p);
    /// "2,1,1"
    static OrderedPartition parse(const std::string& text);

    int size() const { return static_cast<int>(parts.size()); }
    int total() const;
    /// 1-based strands of part s (0-based s).
    std::vector<int> block(int s) const;
    std::string to_string() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// All ordered partitions of n, in lexicographic order of parts.
std::vector<OrderedPartition> ordered_partitions(int n);

/// Relabels the generators of factor j into block j and sums.  Throws std::invalid_argument
/// if a factor uses a strand beyond its part.
lie::LieElement juxtapose(const OrderedPartition& I, const std::vector<lie::LieElement>& factors);

/// Lie homomorphism p_r -> p_|I| with x_st -> sum_{p in block s, q in block t} x_pq.
lie::LieElement cabling_map(const OrderedPartition& I, const lie::LieElement& x, const lie::FreeLie& target);

struct RelationImage {
    std::string relation;
    bool residual_zero = true;
};

struct CablingReport {
    OrderedPartition partition;
    std::vector<RelationImage> relations;

    bool passed() const;
};

/// Images of every defining relation of p_r, reduced in p_|I|.
CablingReport cabling_respects_relations(const OrderedPartition& I, const PureBraid& target);
/// Brackets of juxtaposed generators from distinct factors vanish in p_|I|.
Check juxtaposition_commutes(const OrderedPartition& I, const PureBraid& target);
/// c_P o c_K = c_I on the generators of p_r, where J_s refines part s of I, K = (|J_1|, ..., |J_r|)
/// counts parts and P concatenates the J_s.
Check cabling_coherence(const OrderedPartition& I, const std::vector<OrderedPartition>& refinement);

struct SweepSummary {
    int partitions = 0;
    int relation_images = 0;
    int compositions = 0;
    std::vector<Check> failures;

    bool passed() const { return failures.empty(); }
};

/// Relation preservation and juxtaposition for |I| <= max_total, coherence for |I| <= max_coherence.
SweepSummary cabling_sweep(int max_total, int max_coherence);

}  // namespace genuskit::braid

#endif  // GENUSKIT_OPERAD_HPP
