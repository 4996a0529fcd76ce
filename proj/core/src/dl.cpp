//
// Copyright (c) 2026 The lcasp authors
//
// This file is part of lcasp.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <lcasp/dl.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace lcasp {

std::string to_string(DiffConstraint const &c) {
    return c.x + "-" + c.y + (c.strict ? "<" : "<=") + to_fraction(c.k);
}

bool satisfied(DiffConstraint const &c, std::map<std::string, Rational> const &values) {
    auto get = [&](std::string const &var) -> Rational {
        if (var == zero_vertex) { return 0; }
        auto it = values.find(var);
        return it == values.end() ? Rational(0) : it->second;
    };
    Rational diff = get(c.x) - get(c.y);
    return c.strict ? diff < c.k : diff <= c.k;
}

DiffConstraint negate(DiffConstraint const &c, Domain domain, Rational const &epsilon) {
    DiffConstraint res{c.y, c.x, Rational(-c.k), false};
    if (!c.strict) {
        if (domain == Domain::integer) { res.k = Rational(-floor(c.k) - 1); }
        else { res.k -= epsilon; }
    }
    return res;
}

DlStore::DlStore(Domain domain, std::optional<Rational> epsilon)
    : domain_(domain)
    , epsilon_(std::move(epsilon)) {}

std::size_t DlStore::vertex(std::string const &name) {
    auto [it, inserted] = index_.emplace(name, names_.size());
    if (inserted) {
        names_.push_back(name);
        potential_.emplace_back(0);
        out_.emplace_back();
    }
    return it->second;
}

Rational DlStore::weight(DiffConstraint const &c) const {
    if (domain_ == Domain::integer) { return Rational(c.strict ? ceil(c.k) - 1 : floor(c.k)); }
    if (!c.strict) { return c.k; }
    if (!epsilon_) { throw std::invalid_argument("strict difference constraint over the reals requires an epsilon"); }
    return c.k - *epsilon_;
}

std::vector<DiffConstraint> DlStore::constraints() const {
    std::vector<DiffConstraint> res;
    for (auto const &rec : trail_) { res.push_back(rec.constraint); }
    return res;
}

DlStore::Result DlStore::assert_constraint(DiffConstraint const &c, unsigned level, std::size_t tag) {
    if (level < level_) { throw std::invalid_argument("assertion below the current decision level"); }
    Rational w = weight(c);
    std::size_t u = vertex(c.y);
    std::size_t v = vertex(c.x);
    level_ = level;
    Result res;
    if (u == v && w < 0) {
        res.sat = false;
        res.conflict.push_back(c);
        res.tags.push_back(tag);
        return res;
    }
    Record rec{level, u, v, w, c, tag, {}};
    if (u != v && potential_[u] + w < potential_[v]) {
        std::map<std::size_t, Rational> label;
        std::map<std::size_t, std::size_t> pred;
        std::deque<std::size_t> queue{v};
        std::vector<bool> queued(names_.size(), false);
        label[v] = potential_[u] + w;
        queued[v] = true;
        while (!queue.empty()) {
            std::size_t s = queue.front();
            queue.pop_front();
            queued[s] = false;
            Rational ds = label.at(s);
            for (std::size_t e : out_[s]) {
                auto const &edge = trail_[e];
                Rational cand = ds + edge.weight;
                auto it = label.find(edge.to);
                Rational const &cur = it != label.end() ? it->second : potential_[edge.to];
                if (cand >= cur) { continue; }
                if (edge.to == u) {
                    res.sat = false;
                    res.conflict.push_back(c);
                    res.tags.push_back(tag);
                    res.conflict.push_back(edge.constraint);
                    res.tags.push_back(edge.tag);
                    for (std::size_t t = s; t != v;) {
                        auto const &back = trail_[pred.at(t)];
                        res.conflict.push_back(back.constraint);
                        res.tags.push_back(back.tag);
                        t = back.from;
                    }
                    return res;
                }
                label[edge.to] = cand;
                pred[edge.to] = e;
                if (!queued[edge.to]) {
                    queued[edge.to] = true;
                    queue.push_back(edge.to);
                }
            }
        }
        for (auto &[vtx, val] : label) {
            rec.old_potential.emplace_back(vtx, potential_[vtx]);
            potential_[vtx] = val;
        }
    }
    out_[u].push_back(trail_.size());
    trail_.push_back(std::move(rec));
    return res;
}

void DlStore::backtrack(unsigned level) {
    while (!trail_.empty() && trail_.back().level > level) {
        auto &rec = trail_.back();
        for (auto it = rec.old_potential.rbegin(); it != rec.old_potential.rend(); ++it) {
            potential_[it->first] = it->second;
        }
        out_[rec.from].pop_back();
        trail_.pop_back();
    }
    level_ = std::min(level_, level);
}

std::map<std::string, Rational> DlStore::witness() const {
    std::size_t n = names_.size();
    std::vector<Rational> dist(n, Rational(0));
    for (std::size_t round = 0; round <= n; ++round) {
        bool changed = false;
        for (auto const &rec : trail_) {
            if (dist[rec.from] + rec.weight < dist[rec.to]) {
                dist[rec.to] = dist[rec.from] + rec.weight;
                changed = true;
            }
        }
        if (!changed) { break; }
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) { x = parent[x] = parent[parent[x]]; }
        return x;
    };
    std::vector<bool> used(n, false);
    for (auto const &rec : trail_) {
        used[rec.from] = used[rec.to] = true;
        parent[find(rec.from)] = find(rec.to);
    }
    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) { components[find(i)].push_back(i); }
    }
    auto zero = index_.find(zero_vertex);
    std::map<std::string, Rational> res;
    for (auto const &[root, members] : components) {
        Rational shift;
        if (zero != index_.end() && used[zero->second] && find(zero->second) == root) { shift = -dist[zero->second]; }
        else {
            std::vector<Rational> values;
            for (auto i : members) { values.push_back(dist[i]); }
            std::sort(values.begin(), values.end());
            shift = -values[values.size() / 2];
        }
        for (auto i : members) {
            if (names_[i] != zero_vertex) { res.emplace(names_[i], dist[i] + shift); }
        }
    }
    return res;
}

} // namespace lcasp
