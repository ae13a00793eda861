#pragma once

// Slow, independent reference computations used by the tests. Nothing here
// touches the library's multiplication tables: permutations are composed
// directly.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

// "a then b"
inline Perm then(const Perm& a, const Perm& b)
{
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = b[a[i]];
    return out;
}

inline Perm inverse(const Perm& a)
{
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[a[i]] = static_cast<int>(i);
    return out;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens)
{
    Perm id(gens.front().size());
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = static_cast<int>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> todo{id};
    while (!todo.empty()) {
        Perm x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Perm y = then(x, g);
            if (seen.insert(y).second)
                todo.push_back(y);
        }
    }
    return seen;
}

inline std::vector<std::set<Perm>> classes(const std::set<Perm>& group)
{
    std::vector<std::set<Perm>> out;
    std::set<Perm> done;
    for (const auto& g : group) {
        if (done.count(g))
            continue;
        std::set<Perm> cls;
        for (const auto& h : group)
            cls.insert(then(then(inverse(h), g), h));
        done.insert(cls.begin(), cls.end());
        out.push_back(cls);
    }
    return out;
}

// Class-algebra constants: number of (a,b) in C_i x C_j with ab = fixed
// element of C_k.
inline std::vector<std::vector<std::vector<long>>> class_constants(const std::vector<std::set<Perm>>& cls)
{
    const std::size_t d = cls.size();
    std::vector<std::vector<std::vector<long>>> out(d, std::vector<std::vector<long>>(d, std::vector<long>(d, 0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Perm& target = *cls[k].begin();
                for (const auto& a : cls[i])
                    for (const auto& b : cls[j])
                        if (then(a, b) == target)
                            ++out[i][j][k];
            }
    return out;
}

}  // namespace oracle
