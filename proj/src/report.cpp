#include "forestprob/report.hpp"

#include <sstream>

#include "forestprob/version.hpp"

namespace forestprob {

namespace {

std::string certificate_name(GroupCertificate cert) {
    switch (cert) {
        case GroupCertificate::DegreeSequence: return "degree-sequence";
        case GroupCertificate::Isomorphism: return "isomorphism";
        case GroupCertificate::Unchecked: return "unchecked";
    }
    return "unchecked";
}

std::string profile_inline(const TreeDistribution& dist) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, p] : dist.probs()) {
        if (!first) out << "; ";
        out << k << ": " << fraction_string(p);
        first = false;
    }
    return out.str();
}

}  // namespace

nlohmann::json rational_json(const Rational& q) {
    return {{"num", rational_num(q).str()}, {"den", rational_den(q).str()}};
}

nlohmann::json distribution_json(const TreeDistribution& dist) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, p] : dist.probs()) out[std::to_string(k)] = rational_json(p);
    return out;
}

nlohmann::json mc_estimate_json(const McEstimate& e) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [k, c] : e.counts) counts[std::to_string(k)] = c;
    nlohmann::json out = {{"trials", e.trials},
                          {"seed", e.seed},
                          {"workers", e.workers},
                          {"counts", counts}};
    if (e.trials >= 2) {
        nlohmann::json est = nlohmann::json::object();
        for (const auto& [k, c] : e.counts) {
            auto [p, se] = estimate_with_stderr(e, k);
            est[std::to_string(k)] = {{"p", p}, {"stderr", se}};
        }
        out["estimate"] = est;
    }
    return out;
}

nlohmann::json collision_report_json(const CollisionReport& report) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : report.groups) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& m : g.members) members.push_back(m.to_string());
        groups.push_back({{"profile", distribution_json(g.profile)},
                          {"members", members},
                          {"explained_by", g.explained_by},
                          {"certificate", certificate_name(g.certificate)}});
    }
    return {{"family", report.family},
            {"max_vertices", report.max_vertices},
            {"engine", report.engine},
            {"workers", report.workers},
            {"instances", report.instances},
            {"groups", groups}};
}

std::string collision_report_text(const CollisionReport& report) {
    std::ostringstream out;
    out << "sweep family=" << report.family << " max_vertices=" << report.max_vertices
        << " engine=" << report.engine << " workers=" << report.workers
        << " instances=" << report.instances << "\n";
    out << "collision groups: " << report.groups.size() << "\n";
    int index = 1;
    for (const auto& g : report.groups) {
        out << "group " << index++ << " [" << certificate_name(g.certificate) << "]";
        if (!g.explained_by.empty()) {
            out << " explained by";
            for (const auto& e : g.explained_by) out << " " << e;
        }
        out << "\n";
        for (const auto& m : g.members) out << "  " << m.to_string() << "\n";
        out << "  profile: " << profile_inline(g.profile) << "\n";
    }
    return out.str();
}

nlohmann::json verify_summary_json(const VerifySummary& summary) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : summary.items) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& m : item.members) members.push_back(m.to_string());
        items.push_back({{"name", item.name},
                         {"pass", item.pass},
                         {"members", members},
                         {"profile", distribution_json(item.profile)}});
    }
    return {{"all_pass", summary.all_pass}, {"items", items}};
}

std::string verify_summary_text(const VerifySummary& summary) {
    std::ostringstream out;
    int passed = 0;
    for (const auto& item : summary.items) {
        out << (item.pass ? "PASS " : "FAIL ") << item.name << ":";
        for (const auto& m : item.members) out << " " << m.to_string();
        out << " -> " << profile_inline(item.profile) << "\n";
        if (item.pass) ++passed;
    }
    out << passed << "/" << summary.items.size() << " checks passed\n";
    return out.str();
}

}  // namespace forestprob
