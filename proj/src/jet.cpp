#include "curvlab/jet.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace curvlab::jets {

namespace {

void enumerate(int nvars, int max_degree, std::vector<int>& expo, std::vector<int>& degree,
               std::vector<int>& prefix) {
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    prefix.assign(static_cast<size_t>(max_degree) + 1, 0);
    // graded order: all monomials of total degree d, lexicographic within d
    for (int d = 0; d <= max_degree; ++d) {
        // lexicographic enumeration of compositions of d into nvars parts
        std::vector<std::vector<int>> level;
        std::vector<int> stack(static_cast<size_t>(nvars), 0);
        auto rec = [&](auto&& self, int var, int rem) -> void {
            if (var == nvars - 1) {
                stack[static_cast<size_t>(var)] = rem;
                level.push_back(stack);
                return;
            }
            for (int e = d; e >= 0; --e) {
                if (e > rem) continue;
                stack[static_cast<size_t>(var)] = e;
                self(self, var + 1, rem - e);
            }
        };
        rec(rec, 0, d);
        for (const auto& m : level) {
            expo.insert(expo.end(), m.begin(), m.end());
            degree.push_back(d);
        }
        prefix[static_cast<size_t>(d)] = static_cast<int>(degree.size());
    }
}

}  // namespace

JetSpace::JetSpace(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
    if (nvars < 1 || max_degree < 0) throw std::invalid_argument("JetSpace: bad parameters");
    enumerate(nvars, max_degree, expo_, degree_, prefix_);
    const int total = total_size();

    std::map<std::vector<int>, int> lookup;
    for (int i = 0; i < total; ++i) {
        auto e = exponent(i);
        lookup[std::vector<int>(e.begin(), e.end())] = i;
    }

    prod_.assign(static_cast<size_t>(total) * total, -1);
    std::vector<int> sum(static_cast<size_t>(nvars));
    for (int ia = 0; ia < total; ++ia)
        for (int ib = 0; ib < total; ++ib) {
            if (degree_[static_cast<size_t>(ia)] + degree_[static_cast<size_t>(ib)] > max_degree)
                continue;
            auto ea = exponent(ia);
            auto eb = exponent(ib);
            for (int v = 0; v < nvars; ++v)
                sum[static_cast<size_t>(v)] = ea[static_cast<size_t>(v)] + eb[static_cast<size_t>(v)];
            prod_[static_cast<size_t>(ia) * total + ib] = lookup.at(sum);
        }

    lower_.assign(static_cast<size_t>(total) * nvars, -1);
    for (int i = 0; i < total; ++i) {
        auto e = exponent(i);
        for (int v = 0; v < nvars; ++v) {
            if (e[static_cast<size_t>(v)] == 0) continue;
            std::vector<int> down(e.begin(), e.end());
            down[static_cast<size_t>(v)] -= 1;
            lower_[static_cast<size_t>(i) * nvars + v] = lookup.at(down);
        }
    }
}

const JetSpace& JetSpace::get(int nvars, int max_degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<JetSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, max_degree);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<JetSpace>(new JetSpace(nvars, max_degree))).first;
    return *it->second;
}

}  // namespace curvlab::jets
