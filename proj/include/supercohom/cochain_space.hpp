#pragma once

#include "supercohom/graded.hpp"

#include <map>
#include <optional>
#include <vector>

namespace supercohom {

/// Coordinates of super-alternating n-cochains L^n -> M: one block of dim M coordinates per
/// canonical tuple, so coordinate (t, m) sits at t * dim(M) + m.
class CochainSpace {
public:
    CochainSpace(BasisPtr source, BasisPtr target, std::size_t arity);

    std::size_t arity() const { return arity_; }
    const BasisPtr& source() const { return source_; }
    const BasisPtr& target() const { return target_; }
    const std::vector<IndexTuple>& tuples() const { return tuples_; }
    std::size_t dim() const { return tuples_.size() * target_->dim(); }

    std::size_t coordinate(std::size_t tuple_pos, std::size_t m) const
    {
        return tuple_pos * target_->dim() + m;
    }
    std::size_t tuple_of(std::size_t coord) const { return coord / target_->dim(); }
    std::size_t target_of(std::size_t coord) const { return coord % target_->dim(); }

    /// Position of a canonical tuple, nullopt if it is not canonical.
    std::optional<std::size_t> position(const IndexTuple& canonical) const;

    /// Parity of the cochain whose only nonzero value is e_m on tuple t.
    int coordinate_parity(std::size_t coord) const;
    /// Coordinates of the given cochain parity, ascending.
    std::vector<std::size_t> parity_coordinates(int parity) const;

    bool operator==(const CochainSpace& other) const
    {
        return arity_ == other.arity_ && *source_ == *other.source_ && *target_ == *other.target_;
    }

private:
    BasisPtr source_;
    BasisPtr target_;
    std::size_t arity_;
    std::vector<IndexTuple> tuples_;
    std::vector<int> tuple_parity_;
    std::map<IndexTuple, std::size_t> position_;
};

} // namespace supercohom
