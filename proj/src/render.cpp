#include "repcat/render.hpp"

#include "repcat/errors.hpp"

#include <map>
#include <sstream>

namespace repcat {

namespace {

std::string symbol(const std::string& name) {
    static const std::map<std::string, std::string> names = {
        {"alpha", "α"},   {"alpha1", "α₁"}, {"alpha2", "α₂"}, {"beta", "β"},       {"a1", "a₁"},
        {"a2", "a₂"},     {"delta", "δ"},   {"epsilon", "ε"}, {"mu1", "μ₁"},       {"mu2", "μ₂"},
        {"nu1", "ν₁"},    {"nu2", "ν₂"},    {"phi", "φ"},     {"ind_b", "ind b"},  {"ind_a2", "ind a₂"},
        {"threshold", "⌈α₂/(δL)⌉"}};
    const auto it = names.find(name);
    return it == names.end() ? name : it->second;
}

u64 parse_u64(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw DomainError(std::string("solution json: missing string field ") + field);
    const std::string s = j[field].get<std::string>();
    std::size_t used = 0;
    u64 v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size() || s.front() == '-')
        throw DomainError(std::string("solution json: bad integer in ") + field);
    return v;
}

} // namespace

std::string to_text(const SolutionSet& s) {
    if (s.is_empty())
        return "none";
    std::ostringstream os;
    if (s.is_finite()) {
        os << "k ∈ {";
        const auto& e = s.as_finite().elements;
        for (std::size_t i = 0; i < e.size(); ++i)
            os << (i ? ", " : "") << e[i];
        os << "}";
        return os.str();
    }
    const auto& p = s.as_progression();
    if (p.modulus == 1) {
        if (p.min == 1)
            return "all k ≥ 1";
        os << "k ≥ " << p.min;
        return os.str();
    }
    os << "k ≡ " << p.residue << " (mod " << p.modulus << ")";
    const u64 first_positive = p.residue == 0 ? p.modulus : p.residue;
    if (p.min != first_positive)
        os << ", k ≥ " << p.min;
    return os.str();
}

std::string to_text(const TraceLog& trace) {
    std::ostringstream os;
    for (const auto& st : trace.steps()) {
        if (st.step == Step::I) {
            if (auto p = st.get("p"), alpha = st.get("alpha"); p && alpha)
                os << "modulus " << *p << "^" << *alpha << ":\n";
        }
        os << "  (" << step_label(st.step) << ")";
        bool first = true;
        for (const auto& b : st.bindings) {
            if (b.name.ends_with("_signed") || (st.step == Step::I && (b.name == "p" || b.name == "alpha")))
                continue;
            os << (first ? " " : ", ") << symbol(b.name) << " = " << b.value;
            if (auto signed_rep = st.get(b.name + "_signed"))
                os << " ≡ " << *signed_rep;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

Json to_json(const CongruenceProblem& problem) {
    return Json{{"n", std::to_string(problem.n)},
                {"base", std::to_string(problem.base)},
                {"a", std::to_string(problem.a)},
                {"m", std::to_string(problem.m)}};
}

Json to_json(const SolutionSet& s) {
    Json j;
    if (s.is_empty()) {
        j["kind"] = "empty";
    } else if (s.is_finite()) {
        j["kind"] = "finite";
        j["elements"] = Json::array();
        for (u64 k : s.as_finite().elements)
            j["elements"].push_back(std::to_string(k));
    } else {
        const auto& p = s.as_progression();
        j["kind"] = "progression";
        j["residue"] = std::to_string(p.residue);
        j["modulus"] = std::to_string(p.modulus);
        j["min"] = std::to_string(p.min);
    }
    return j;
}

Json to_json(const TraceLog& trace) {
    Json steps = Json::array();
    for (const auto& st : trace.steps()) {
        Json bindings = Json::object();
        for (const auto& b : st.bindings)
            bindings[b.name] = std::to_string(b.value);
        steps.push_back(Json{{"step", std::string(step_label(st.step))}, {"bindings", std::move(bindings)}});
    }
    return steps;
}

SolutionSet solution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw DomainError("solution json: missing kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "empty")
        return SolutionSet::empty();
    if (kind == "finite") {
        if (!j.contains("elements") || !j["elements"].is_array())
            throw DomainError("solution json: missing elements");
        std::set<u64> elements;
        for (const auto& e : j["elements"]) {
            Json wrapper{{"e", e}};
            elements.insert(parse_u64(wrapper, "e"));
        }
        if (elements.empty())
            throw DomainError("solution json: finite set with no elements");
        return SolutionSet::finite(std::move(elements));
    }
    if (kind == "progression") {
        const u64 residue = parse_u64(j, "residue");
        const u64 modulus = parse_u64(j, "modulus");
        const u64 min = parse_u64(j, "min");
        auto s = SolutionSet::progression(residue, modulus, min);
        if (s.as_progression() != Progression{residue, modulus, min})
            throw DomainError("solution json: progression is not canonical");
        return s;
    }
    throw DomainError("solution json: unknown kind " + kind);
}

} // namespace repcat
