#include "genuskit/operad.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace genuskit::braid {

using lie::LieElement;

OrderedPartition::OrderedPartition(std::vector<int> p) : parts(std::move(p)) {
    for (int part : parts)
        if (part < 1) throw std::invalid_argument("ordered partition parts must be positive");
}

OrderedPartition OrderedPartition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad partition part '" + item + "'");
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return OrderedPartition(std::move(parts));
}

int OrderedPartition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> OrderedPartition::block(int s) const {
    const int start = std::accumulate(parts.begin(), parts.begin() + s, 0);
    std::vector<int> out(static_cast<std::size_t>(parts.at(static_cast<std::size_t>(s))));
    std::iota(out.begin(), out.end(), start + 1);
    return out;
}

std::string OrderedPartition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + std::to_string(parts[k]);
    return out;
}

std::vector<OrderedPartition> ordered_partitions(int n) {
    std::vector<OrderedPartition> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            current.push_back(p);
            rec(left - p);
            current.pop_back();
        }
    };
    if (n >= 1) rec(n);
    return out;
}

namespace {

int max_strand(const LieElement& x) {
    int top = 0;
    for (const auto& [w, c] : x.terms())
        for (int l : w) top = std::max(top, generator_pair(l).second);
    return top;
}

// Lie homomorphism of free Lie algebras on x_ij given by images of the generators.
LieElement map_generators(const LieElement& x, const lie::FreeLie& target, const std::function<LieElement(int, int)>& image) {
    std::function<LieElement(int)> letter = [&image](int l) {
        auto [i, j] = generator_pair(l);
        return image(i, j);
    };
    std::function<LieElement(const LieElement&, const LieElement&)> br = [&target](const LieElement& a, const LieElement& b) {
        return target.bracket(a, b);
    };
    return lie::evaluate<LieElement>(x, letter, br, LieElement());
}

LieElement gen(const lie::FreeLie& target, int i, int j) { return target.generator(generator_letter(i, j)); }

}  // namespace

LieElement juxtapose(const OrderedPartition& I, const std::vector<LieElement>& factors) {
    if (static_cast<int>(factors.size()) != I.size()) throw std::invalid_argument("one factor per part is required");
    const lie::FreeLie target(pure_braid_alphabet(std::max(2, I.total())));
    LieElement out;
    int offset = 0;
    for (int s = 0; s < I.size(); ++s) {
        const auto& x = factors[static_cast<std::size_t>(s)];
        if (max_strand(x) > I.parts[static_cast<std::size_t>(s)])
            throw std::invalid_argument("factor " + std::to_string(s + 1) + " does not live in p_" +
                                        std::to_string(I.parts[static_cast<std::size_t>(s)]));
        out += map_generators(x, target, [&](int i, int j) { return gen(target, offset + i, offset + j); });
        offset += I.parts[static_cast<std::size_t>(s)];
    }
    return out;
}

LieElement cabling_map(const OrderedPartition& I, const LieElement& x, const lie::FreeLie& target) {
    if (max_strand(x) > I.size())
        throw std::invalid_argument("element of p_" + std::to_string(max_strand(x)) + " cannot be cabled by a partition with " +
                                    std::to_string(I.size()) + " parts");
    if (I.total() >= 2 && target.alphabet().size() < I.total() * (I.total() - 1) / 2)
        throw std::invalid_argument("target algebra has too few strands");
    return map_generators(x, target, [&](int s, int t) {
        LieElement sum;
        for (int p : I.block(s - 1))
            for (int q : I.block(t - 1)) sum += gen(target, p, q);
        return sum;
    });
}

bool CablingReport::passed() const {
    for (const auto& r : relations)
        if (!r.residual_zero) return false;
    return true;
}

CablingReport cabling_respects_relations(const OrderedPartition& I, const PureBraid& target) {
    if (target.strands() != I.total()) throw std::invalid_argument("target must be p_|I|");
    CablingReport report;
    report.partition = I;
    if (I.size() < 2) return report;
    const PureBraid source(I.size());
    for (const auto& r : source.relations()) {
        const LieElement image = cabling_map(I, r, target.lie());
        report.relations.push_back({source.lie().to_string(r), target.is_zero(image)});
    }
    return report;
}

Check juxtaposition_commutes(const OrderedPartition& I, const PureBraid& target) {
    Check check{"juxtaposition " + I.to_string(), true, ""};
    if (target.strands() != I.total()) throw std::invalid_argument("target must be p_|I|");
    // Generator images of each factor.
    std::vector<std::vector<LieElement>> images(static_cast<std::size_t>(I.size()));
    for (int s = 0; s < I.size(); ++s) {
        const int part = I.parts[static_cast<std::size_t>(s)];
        for (int j = 2; j <= part; ++j)
            for (int i = 1; i < j; ++i) {
                std::vector<LieElement> factors(static_cast<std::size_t>(I.size()));
                factors[static_cast<std::size_t>(s)] = lie::FreeLie(pure_braid_alphabet(std::max(2, part))).generator(generator_letter(i, j));
                images[static_cast<std::size_t>(s)].push_back(juxtapose(I, factors));
            }
    }
    for (std::size_t s = 0; s < images.size(); ++s)
        for (std::size_t t = s + 1; t < images.size(); ++t)
            for (const auto& a : images[s])
                for (const auto& b : images[t])
                    if (!target.is_zero(target.lie().bracket(a, b))) {
                        check.passed = false;
                        check.detail = "[" + target.lie().to_string(a) + "," + target.lie().to_string(b) + "] != 0";
                        return check;
                    }
    return check;
}

Check cabling_coherence(const OrderedPartition& I, const std::vector<OrderedPartition>& refinement) {
    if (static_cast<int>(refinement.size()) != I.size()) throw std::invalid_argument("one refinement per part is required");
    std::vector<int> k_parts, p_parts;
    for (int s = 0; s < I.size(); ++s) {
        const auto& J = refinement[static_cast<std::size_t>(s)];
        if (J.total() != I.parts[static_cast<std::size_t>(s)])
            throw std::invalid_argument("refinement " + J.to_string() + " does not partition part " + std::to_string(s + 1));
        k_parts.push_back(J.size());
        p_parts.insert(p_parts.end(), J.parts.begin(), J.parts.end());
    }
    const OrderedPartition K(k_parts), P(p_parts);
    std::string name = "coherence " + I.to_string() + " via";
    for (const auto& J : refinement) name += " (" + J.to_string() + ")";
    Check check{name, true, ""};
    const int n = I.total();
    const lie::FreeLie target(pure_braid_alphabet(std::max(2, n)));
    const lie::FreeLie middle(pure_braid_alphabet(std::max(2, K.total())));
    for (int t = 2; t <= I.size(); ++t)
        for (int s = 1; s < t; ++s) {
            const LieElement x = lie::FreeLie(pure_braid_alphabet(I.size())).generator(generator_letter(s, t));
            const LieElement direct = cabling_map(I, x, target);
            const LieElement composite = cabling_map(P, cabling_map(K, x, middle), target);
            if (!(direct == composite)) {
                check.passed = false;
                check.detail = "x" + std::to_string(s) + std::to_string(t) + ": " + target.to_string(direct) + " vs " +
                               target.to_string(composite);
                return check;
            }
        }
    return check;
}

SweepSummary cabling_sweep(int max_total, int max_coherence) {
    SweepSummary summary;
    for (int n = 1; n <= max_total; ++n) {
        const PureBraid target(std::max(2, n));
        for (const auto& I : ordered_partitions(n)) {
            ++summary.partitions;
            if (n >= 2) {
                const auto report = cabling_respects_relations(I, target);
                summary.relation_images += static_cast<int>(report.relations.size());
                for (const auto& r : report.relations)
                    if (!r.residual_zero) summary.failures.push_back({"relations " + I.to_string(), false, r.relation});
                auto juxt = juxtaposition_commutes(I, target);
                if (!juxt.passed) summary.failures.push_back(std::move(juxt));
            }
            if (n > max_coherence) continue;
            // Every choice of refinements of the parts.
            std::vector<std::vector<OrderedPartition>> options;
            for (int part : I.parts) options.push_back(ordered_partitions(part));
            std::vector<OrderedPartition> choice;
            std::function<void(std::size_t)> rec = [&](std::size_t s) {
                if (s == options.size()) {
                    ++summary.compositions;
                    auto c = cabling_coherence(I, choice);
                    if (!c.passed) summary.failures.push_back(std::move(c));
                    return;
                }
                for (const auto& J : options[s]) {
                    choice.push_back(J);
                    rec(s + 1);
                    choice.pop_back();
                }
            };
            rec(0);
        }
    }
    return summary;
}

}  // namespace genuskit::braid
