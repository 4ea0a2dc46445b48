/*
 *   Copyright 2026 The pastures authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "pastures/morphism.hpp"

#include "pastures/errors.hpp"
#include "pastures/hexagons.hpp"

#include <algorithm>
#include <functional>

namespace pastures {

namespace {

bool same_pasture(const Pasture& a, const Pasture& b) {
    return a.units().same_shape(b.units()) && a.epsilon() == b.epsilon() && a.null_orbits() == b.null_orbits();
}

std::string triple_string(const Pasture& p, const Triple& t) {
    return "{" + p.format(t[0]) + ", " + p.format(t[1]) + ", " + p.format(t[2]) + "}";
}

/// Largest canonical generator index occurring in any of the elements, or -1.
long max_support(const std::vector<GroupElement>& xs) {
    long m = -1;
    for (const auto& x : xs)
        for (std::size_t i = 0; i < x.coords.size(); ++i)
            if (x.coords[i] != 0) m = std::max(m, static_cast<long>(i));
    return m;
}

std::uint64_t bounded_product(const std::vector<std::size_t>& sizes, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (auto s : sizes) {
        if (s == 0) return 0;
        if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(s), &total) || total > cap)
            throw SearchSpaceExceeded("more than " + std::to_string(cap) + " candidate assignments");
    }
    return total;
}

std::vector<PastureMorphism> homs_by_generators(const PasturePtr& p, const PasturePtr& q, const HomOptions& opt) {
    const AbelianGroup& g = p->units();
    const AbelianGroup& h = q->units();
    std::vector<std::vector<GroupElement>> candidates;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::int64_t d = g.generator_order(i);
        candidates.push_back(d == 0 ? h.elements() : h.roots_of_unity(d));
        sizes.push_back(candidates.back().size());
    }
    bounded_product(sizes, opt.max_candidates);

    // Each constraint is checked as soon as every generator it involves is assigned.
    std::vector<std::vector<std::size_t>> orbit_checks(g.rank() + 1);
    for (std::size_t k = 0; k < p->null_orbits().size(); ++k) {
        const auto& t = p->null_orbits()[k];
        orbit_checks[static_cast<std::size_t>(max_support({t[0], t[1], t[2]}) + 1)].push_back(k);
    }
    const std::size_t eps_at = static_cast<std::size_t>(max_support({p->epsilon()}) + 1);

    std::vector<GroupElement> cur(g.rank(), h.identity());
    std::vector<PastureMorphism> out;
    auto image = [&](const GroupElement& x) { return h.evaluate(cur, x.coords); };
    auto ok_at = [&](std::size_t level) {
        if (level == eps_at && !(image(p->epsilon()) == q->epsilon())) return false;
        for (auto k : orbit_checks[level]) {
            const auto& t = p->null_orbits()[k];
            if (!q->null_units(image(t[0]), image(t[1]), image(t[2]))) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == g.rank()) {
            out.emplace_back(p, q, cur);
            return;
        }
        for (const auto& x : candidates[i]) {
            cur[i] = x;
            if (ok_at(i + 1)) rec(i + 1);
        }
        cur[i] = h.identity();
    };
    if (ok_at(0)) rec(0);
    return out;
}

std::vector<PastureMorphism> homs_by_fundamentals(const PasturePtr& p, const PasturePtr& q, const HomOptions& opt) {
    auto gens = fundamental_generating_set(*p);
    if (!gens)
        throw InfiniteTargetError("target is infinite and the source units are not generated by -1 and "
                                  "fundamental elements");
    const AbelianGroup& g = p->units();
    const AbelianGroup& h = q->units();
    std::vector<GroupElement> all = *gens;
    all.push_back(p->epsilon());
    // Words for the canonical generators in terms of gens and -1.
    std::vector<std::vector<std::int64_t>> words;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        auto x = g.express(all, g.generator(j));
        if (!x) throw std::logic_error("generating set does not generate");
        std::vector<std::int64_t> w;
        for (const auto& v : *x) w.push_back(to_int64(v));
        words.push_back(w);
    }
    const auto targets = fundamental_elements(*q);
    std::vector<std::size_t> sizes(gens->size(), targets.size());
    bounded_product(sizes, opt.max_candidates);

    std::vector<PastureMorphism> out;
    std::vector<GroupElement> assign(gens->size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == gens->size()) {
            std::vector<GroupElement> imgs = assign;
            imgs.push_back(q->epsilon());
            std::vector<GroupElement> images;
            for (const auto& w : words) images.push_back(h.evaluate(imgs, w));
            try {
                PastureMorphism f = make(p, q, images);
                for (std::size_t k = 0; k < gens->size(); ++k)
                    if (!(f.apply((*gens)[k]) == assign[k])) return;
                out.push_back(std::move(f));
            } catch (const Error&) {
            }
            return;
        }
        for (const auto& t : targets) {
            assign[i] = t;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const PastureMorphism& a, const PastureMorphism& b) { return a.images() < b.images(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

GroupElement PastureMorphism::apply(const GroupElement& x) const {
    return target_->units().evaluate(images_, x.coords);
}

PastureElement PastureMorphism::apply(const PastureElement& x) const {
    if (x.is_zero()) return x;
    return PastureElement::of(apply(*x.unit));
}

PastureMorphism make(PasturePtr source, PasturePtr target, std::vector<GroupElement> images) {
    const AbelianGroup& g = source->units();
    const AbelianGroup& h = target->units();
    if (images.size() != g.rank())
        throw GroupHomViolation("expected " + std::to_string(g.rank()) + " generator images, got " +
                                std::to_string(images.size()));
    for (auto& x : images) {
        if (x.coords.size() != h.rank()) throw GroupHomViolation("image has wrong coordinate length");
        x = h.reduce(x.coords);
    }
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::int64_t d = g.generator_order(i);
        if (d > 0 && !h.is_identity(h.pow(images[i], d)))
            throw GroupHomViolation("generator " + std::to_string(i) + " of order " + std::to_string(d) +
                                    " maps to " + target->format(images[i]));
    }
    PastureMorphism f(source, target, std::move(images));
    if (!(f.apply(source->epsilon()) == target->epsilon()))
        throw EpsilonViolation("-1 maps to " + target->format(f.apply(source->epsilon())));
    for (const auto& t : source->null_orbits()) {
        if (!target->null_units(f.apply(t[0]), f.apply(t[1]), f.apply(t[2])))
            throw NullsetViolation("orbit " + triple_string(*source, t) + " maps outside the nullset");
    }
    return f;
}

PastureMorphism make_from_generators(PasturePtr source, PasturePtr target, const std::vector<GroupElement>& gens,
                                     const std::vector<GroupElement>& imgs) {
    const AbelianGroup& g = source->units();
    const AbelianGroup& h = target->units();
    std::vector<GroupElement> images;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        auto x = g.express(gens, g.generator(j));
        if (!x) throw GroupHomViolation("the given elements do not generate the unit group");
        GroupElement y = h.identity();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if ((*x)[i] != 0) y = h.mul(y, h.pow(imgs[i], to_int64((*x)[i])));
        images.push_back(y);
    }
    PastureMorphism f = make(source, target, images);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!(f.apply(gens[i]) == imgs[i]))
            throw GroupHomViolation("the assignment does not respect the relations among the given elements");
    return f;
}

PastureMorphism identity_morphism(PasturePtr p) {
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < p->units().rank(); ++i) images.push_back(p->units().generator(i));
    return make(p, p, images);
}

PastureMorphism compose(const PastureMorphism& g, const PastureMorphism& f) {
    if (!same_pasture(*f.target(), *g.source()))
        throw ChainMismatch("target of the first map is not the source of the second");
    std::vector<GroupElement> images;
    for (const auto& x : f.images()) images.push_back(g.apply(x));
    return make(f.source(), g.target(), images);
}

std::optional<std::vector<GroupElement>> fundamental_generating_set(const Pasture& p) {
    const AbelianGroup& g = p.units();
    std::vector<GroupElement> chosen;
    std::vector<GroupElement> with_eps{p.epsilon()};
    AbelianGroup current = g.quotient_by(with_eps);
    for (const auto& a : fundamental_elements(p)) {
        if (current.rank() == 0) break;
        with_eps.push_back(a);
        AbelianGroup next = g.quotient_by(with_eps);
        if (next.same_shape(current)) {
            with_eps.pop_back();
            continue;
        }
        chosen.push_back(a);
        current = next;
    }
    if (current.rank() != 0) return std::nullopt;
    return chosen;
}

std::vector<PastureMorphism> hom_set(PasturePtr p, PasturePtr q, const HomOptions& opt) {
    if (q->is_finite() || p->units().free_rank() == 0) return homs_by_generators(p, q, opt);
    return homs_by_fundamentals(p, q, opt);
}

bool is_isomorphism(const PastureMorphism& f) {
    const Pasture& p = *f.source();
    const Pasture& q = *f.target();
    return p.units().same_shape(q.units()) && q.units().generates(f.images()) &&
           p.null_orbits().size() == q.null_orbits().size();
}

IsoResult iso_check(PasturePtr p, PasturePtr q, const HomOptions& opt) {
    IsoResult r;
    auto refuse = [&](std::string why) {
        r.status = IsoStatus::NotIso;
        r.reason = std::move(why);
        return r;
    };
    if (!p->units().same_shape(q->units()))
        return refuse("unit groups differ: " + p->units().describe() + " vs " + q->units().describe());
    if (p->units().epsilon_trivial() != q->units().epsilon_trivial()) return refuse("-1 = 1 holds in only one");
    if (p->null_orbits().size() != q->null_orbits().size())
        return refuse("null orbit counts differ: " + std::to_string(p->null_orbits().size()) + " vs " +
                      std::to_string(q->null_orbits().size()));
    if (!(census(hexagons(*p)) == census(hexagons(*q)))) return refuse("hexagon types differ");

    std::vector<PastureMorphism> homs;
    try {
        if (p->is_finite())
            homs = homs_by_generators(p, q, opt);
        else if (fundamental_generating_set(*p) && fundamental_generating_set(*q))
            homs = homs_by_fundamentals(p, q, opt);
        else {
            r.reason = "units are infinite and not generated by fundamental elements";
            return r;
        }
    } catch (const SearchSpaceExceeded& e) {
        r.reason = e.what();
        return r;
    }
    for (auto& f : homs)
        if (is_isomorphism(f)) {
            r.status = IsoStatus::Iso;
            r.witness = std::move(f);
            return r;
        }
    return refuse("no morphism is bijective");
}

}  // namespace pastures
