#include <lmg/independence.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>
#include <tuple>

namespace lmg {

const char* to_string(Axiom a) {
    switch (a) {
        case Axiom::Symmetry: return "symmetry";
        case Axiom::Decomposition: return "decomposition";
        case Axiom::WeakUnion: return "weak-union";
        case Axiom::Contraction: return "contraction";
        case Axiom::Intersection: return "intersection";
        case Axiom::Composition: return "composition";
    }
    return "?";
}

std::vector<Axiom> AxiomSet::members() const {
    std::vector<Axiom> out;
    for (Axiom a : all_axioms)
        if (contains(a)) out.push_back(a);
    return out;
}

namespace {

std::string normalize_name(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        s.push_back(ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

AxiomSet parse_axiom_set(std::string_view text) {
    const std::string name = normalize_name(text);
    if (name == "semi-graphoid" || name == "semigraphoid") return semi_graphoid;
    if (name == "graphoid") return graphoid;
    if (name == "compositional-graphoid") return compositional_graphoid;
    if (name == "compositional-semi-graphoid" || name == "compositional-semigraphoid")
        return compositional_semi_graphoid;
    AxiomSet out;
    std::string_view rest = name;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        bool found = false;
        for (Axiom a : all_axioms) {
            if (item == to_string(a) || (a == Axiom::WeakUnion && item == "weakunion")) {
                out = out.with(a);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("unknown axiom or axiom set '" + std::string(item) + "'");
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (out == AxiomSet{}) throw std::invalid_argument("empty axiom set");
    return out;
}

IndependenceModel::IndependenceModel(std::vector<std::string> ground) : ground_(std::move(ground)) {
    if (ground_.size() > max_ground_size)
        throw LimitError("independence models are limited to " + std::to_string(max_ground_size) + " elements");
    if (!std::is_sorted(ground_.begin(), ground_.end()))
        throw std::invalid_argument("ground set must be sorted");
    if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
        throw std::invalid_argument("ground set has a duplicate element");
    bits_.assign(std::size_t{1} << (2 * ground_.size()), false);
}

Mask IndependenceModel::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), l);
        if (it == ground_.end() || *it != l) throw std::invalid_argument("'" + l + "' is not in the ground set");
        m |= Mask{1} << (it - ground_.begin());
    }
    return m;
}

std::vector<std::string> IndependenceModel::labels_of(Mask m) const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < ground_.size(); ++k)
        if (m >> k & 1u) out.push_back(ground_[k]);
    return out;
}

Statement IndependenceModel::statement(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                       const std::vector<std::string>& c) const {
    Statement s{mask_of(a), mask_of(b), mask_of(c)};
    validate(s);
    return s;
}

void IndependenceModel::validate(const Statement& s) const {
    if (((s.a | s.b | s.c) & ~full_mask()) != 0) throw std::invalid_argument("statement leaves the ground set");
    if ((s.a & s.b) || (s.a & s.c) || (s.b & s.c)) throw std::invalid_argument("statement sides must be disjoint");
}

std::size_t IndependenceModel::index(const Statement& s) const {
    std::size_t idx = 0;
    for (std::size_t k = ground_.size(); k-- > 0;) {
        unsigned code = (s.a >> k & 1u) ? 1u : (s.b >> k & 1u) ? 2u : (s.c >> k & 1u) ? 3u : 0u;
        idx = idx * 4 + code;
    }
    return idx;
}

bool IndependenceModel::contains(const Statement& s) const {
    validate(s);
    if (s.trivial()) return true;
    return bits_[index(s)];
}

bool IndependenceModel::insert(const Statement& s) {
    validate(s);
    if (s.trivial()) return false;
    auto ref = bits_[index(s)];
    if (ref) return false;
    ref = true;
    ++count_;
    return true;
}

std::vector<Statement> IndependenceModel::statements() const {
    std::vector<Statement> out;
    out.reserve(count_);
    const std::size_t n = ground_.size();
    for (std::size_t idx = 0; idx < bits_.size(); ++idx) {
        if (!bits_[idx]) continue;
        Statement s;
        std::size_t rest = idx;
        for (std::size_t k = 0; k < n; ++k, rest /= 4) {
            switch (rest % 4) {
                case 1: s.a |= Mask{1} << k; break;
                case 2: s.b |= Mask{1} << k; break;
                case 3: s.c |= Mask{1} << k; break;
                default: break;
            }
        }
        out.push_back(s);
    }
    auto key = [](const Statement& s) {
        return std::make_tuple(std::popcount(s.a | s.b), std::popcount(s.c), s.a, s.b, s.c);
    };
    std::sort(out.begin(), out.end(), [&](const Statement& x, const Statement& y) { return key(x) < key(y); });
    return out;
}

bool IndependenceModel::is_symmetric() const {
    for (const auto& s : statements())
        if (!contains(s.mirrored())) return false;
    return true;
}

bool IndependenceModel::is_subset_of(const IndependenceModel& other) const {
    if (ground_ != other.ground_) throw std::invalid_argument("models have different ground sets");
    for (std::size_t idx = 0; idx < bits_.size(); ++idx)
        if (bits_[idx] && !other.bits_[idx]) return false;
    return true;
}

std::string format_statement(const IndependenceModel& model, const Statement& s) {
    auto side = [&](Mask m) {
        std::string out = "{";
        bool first = true;
        for (const auto& l : model.labels_of(m)) {
            if (!first) out += ',';
            out += l;
            first = false;
        }
        return out + "}";
    };
    return side(s.a) + " _||_ " + side(s.b) + " | " + side(s.c);
}

Statement parse_statement(const IndependenceModel& model, std::string_view text) {
    auto parse_side = [&](std::string_view part) {
        part = trim(part);
        std::vector<std::string> labels;
        if (!part.empty() && part.front() == '{') {
            if (part.back() != '}') throw std::invalid_argument("unbalanced braces in '" + std::string(part) + "'");
            part = trim(part.substr(1, part.size() - 2));
        }
        while (!part.empty()) {
            auto comma = part.find(',');
            auto item = trim(part.substr(0, comma));
            if (item.empty()) throw std::invalid_argument("empty element in statement");
            labels.emplace_back(item);
            part = comma == std::string_view::npos ? std::string_view{} : part.substr(comma + 1);
        }
        return model.mask_of(labels);
    };
    auto sep = text.find("_||_");
    if (sep == std::string_view::npos) throw std::invalid_argument("statement needs '_||_'");
    auto bar = text.find('|', sep + 4);
    std::string_view a = text.substr(0, sep);
    std::string_view b = bar == std::string_view::npos ? text.substr(sep + 4) : text.substr(sep + 4, bar - sep - 4);
    std::string_view c = bar == std::string_view::npos ? std::string_view{} : text.substr(bar + 1);
    Statement s{parse_side(a), parse_side(b), parse_side(c)};
    model.validate(s);
    return s;
}

IndependenceModel marginal_model(const IndependenceModel& model, const std::vector<std::string>& removed) {
    const Mask m = model.mask_of(removed);
    std::vector<std::string> kept;
    std::vector<std::size_t> old_pos;
    for (std::size_t k = 0; k < model.ground_size(); ++k) {
        if (m >> k & 1u) continue;
        kept.push_back(model.ground()[k]);
        old_pos.push_back(k);
    }
    IndependenceModel out(kept);
    auto remap = [&](Mask x) {
        Mask y = 0;
        for (std::size_t k = 0; k < old_pos.size(); ++k)
            if (x >> old_pos[k] & 1u) y |= Mask{1} << k;
        return y;
    };
    for (const auto& s : model.statements())
        if (((s.a | s.b | s.c) & m) == 0) out.insert({remap(s.a), remap(s.b), remap(s.c)});
    return out;
}

}  // namespace lmg
