#include "supercohom/cochain_space.hpp"

namespace supercohom {

CochainSpace::CochainSpace(BasisPtr source, BasisPtr target, std::size_t arity)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity),
      tuples_(superalt_basis(*source_, arity))
{
    for (std::size_t k = 0; k < tuples_.size(); ++k) {
        int p = 0;
        for (auto i : tuples_[k])
            p ^= source_->parity(i);
        tuple_parity_.push_back(p);
        position_.emplace(tuples_[k], k);
    }
}

std::optional<std::size_t> CochainSpace::position(const IndexTuple& canonical) const
{
    auto it = position_.find(canonical);
    if (it == position_.end())
        return std::nullopt;
    return it->second;
}

int CochainSpace::coordinate_parity(std::size_t coord) const
{
    return tuple_parity_[tuple_of(coord)] ^ target_->parity(target_of(coord));
}

std::vector<std::size_t> CochainSpace::parity_coordinates(int parity) const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < dim(); ++c)
        if (coordinate_parity(c) == parity)
            out.push_back(c);
    return out;
}

} // namespace supercohom
