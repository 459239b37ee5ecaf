// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/types.hpp"

#include <algorithm>

namespace schwarz {

int PointMultiset::total() const {
    int t = 0;
    for (const Entry& e : entries) t += e.multiplicity;
    return t;
}

std::vector<Complex> PointMultiset::support() const {
    std::vector<Complex> out;
    out.reserve(entries.size());
    for (const Entry& e : entries) out.push_back(e.point);
    return out;
}

std::vector<Complex> PointMultiset::expanded() const {
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(total()));
    for (const Entry& e : entries)
        for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.point);
    return out;
}

PointMultiset PointMultiset::singleton(Complex p, int multiplicity) {
    detail::require(multiplicity >= 1, ErrorCode::invalid_argument,
                    "multiplicity must be positive");
    PointMultiset m;
    m.entries.push_back({p, multiplicity});
    return m;
}

PointMultiset PointMultiset::from_points(std::span<const Complex> pts) {
    PointMultiset m;
    m.entries.reserve(pts.size());
    for (Complex p : pts) m.entries.push_back({p, 1});
    std::sort(m.entries.begin(), m.entries.end(), [](const Entry& a, const Entry& b) {
        if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
        return a.point.imag() < b.point.imag();
    });
    return m;
}

PointMultiset PointMultiset::cluster(std::span<const Complex> pts, double radius) {
    detail::require(radius >= 0.0, ErrorCode::invalid_argument,
                    "cluster radius must be non-negative");
    std::vector<std::vector<Complex>> groups;
    for (Complex p : pts) {
        std::vector<size_t> hits;
        for (size_t g = 0; g < groups.size(); ++g) {
            for (Complex q : groups[g]) {
                if (std::abs(p - q) <= radius) {
                    hits.push_back(g);
                    break;
                }
            }
        }
        if (hits.empty()) {
            groups.push_back({p});
            continue;
        }
        groups[hits[0]].push_back(p);
        // A new point can bridge previously separate groups; fold them in.
        for (size_t k = hits.size(); k-- > 1;) {
            auto& dst = groups[hits[0]];
            auto& src = groups[hits[k]];
            dst.insert(dst.end(), src.begin(), src.end());
            groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(hits[k]));
        }
    }

    PointMultiset m;
    m.entries.reserve(groups.size());
    for (const auto& g : groups) {
        Complex sum = 0.0;
        for (Complex q : g) sum += q;
        m.entries.push_back({sum / static_cast<double>(g.size()),
                             static_cast<int>(g.size())});
    }
    std::sort(m.entries.begin(), m.entries.end(),
              [](const Entry& a, const Entry& b) {
                  if (a.point.real() != b.point.real())
                      return a.point.real() < b.point.real();
                  return a.point.imag() < b.point.imag();
              });
    return m;
}

}  // namespace schwarz
