#pragma once

/*
 * Generic breadth-first orbit enumeration with canonical-key deduplication.
 * States must be strictly orderable; the action callback must return the
 * state already in canonical form.
 */

#include <cstddef>
#include <set>
#include <vector>

namespace pezzo {

template <class State>
struct Orbit {
    std::vector<State> elements;
    bool complete = true;  // false when the budget was exhausted
    size_t size() const { return elements.size(); }
};

template <class State, class Gen, class Act>
Orbit<State> enumerate_orbit(const State& seed, const std::vector<Gen>& gens, Act act,
                             size_t budget = static_cast<size_t>(-1)) {
    Orbit<State> out;
    std::set<State> seen{seed};
    out.elements.push_back(seed);
    for (size_t f = 0; f < out.elements.size(); ++f) {
        State cur = out.elements[f];  // copy: the vector may reallocate
        for (const auto& g : gens) {
            State nxt = act(g, cur);
            if (seen.insert(nxt).second) {
                if (out.elements.size() >= budget) {
                    out.complete = false;
                    return out;
                }
                out.elements.push_back(std::move(nxt));
            }
        }
    }
    return out;
}

}  // namespace pezzo
