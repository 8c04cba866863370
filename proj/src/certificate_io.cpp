#include "zsum/certificate_io.hpp"

#include "zsum/error.hpp"
#include "zsum/literal.hpp"

#include <set>

namespace zsum {

using nlohmann::json;

namespace {

std::string entries_literal(const Group& group, const std::vector<GroupElement>& entries)
{
    return to_literal(GSequence(group, entries));
}

} // namespace

json cover_certificate_json(const CoverCertificate& cert, bool verified)
{
    const Group& G = cert.field.group;
    json doc;
    doc["group"] = to_literal(G);
    doc["prime"] = cert.field.field.q();
    doc["zeta"] = cert.field.zeta;
    doc["sequence"] = entries_literal(G, cert.entries);
    doc["entries"] = json::array();
    for (const auto& g : cert.entries) {
        doc["entries"].push_back(to_literal(g));
    }
    doc["mode"] = "cover";
    if (cert.target.size() == static_cast<std::size_t>(G.order())) {
        doc["target"] = "all";
    } else {
        doc["target"] = json::array();
        for (const auto& chi : cert.target) {
            doc["target"].push_back(chi.exps());
        }
    }
    doc["assignments"] = json::array();
    for (const auto& a : cert.assignments) {
        doc["assignments"].push_back(
            {{"entry", a.entry}, {"element", to_literal(cert.entries[a.entry])}, {"character", a.chi.exps()}});
    }
    doc["verified"] = verified;
    return doc;
}

json uncoverable_certificate_json(const CounterexampleSpec& spec, const UncoverableReport& report, bool verified)
{
    json doc;
    doc["group"] = to_literal(spec.group());
    doc["sequence"] = to_literal(spec.sequence());
    doc["mode"] = "uncoverable";
    doc["length"] = spec.length();
    doc["distributions_checked"] = report.distributions_checked;
    doc["uncoverable"] = report.uncoverable;
    doc["verified"] = verified;
    return doc;
}

CoverCertificate cover_certificate_from_json(const json& doc)
{
    try {
        if (doc.at("mode") != "cover") {
            throw Error(ErrorKind::Parse, "not a cover certificate");
        }
        const Group G = parse_group(doc.at("group").get<std::string>());
        const SplittingField field = make_splitting_field(G, doc.at("prime").get<std::uint64_t>());
        if (field.zeta != doc.at("zeta").get<Residue>()) {
            throw Error(ErrorKind::FieldMismatch, "certificate uses a different root of unity");
        }
        CoverCertificate cert{field, {}, {}, {}};
        for (const auto& e : doc.at("entries")) {
            cert.entries.push_back(parse_element(G, e.get<std::string>()));
        }
        if (doc.at("target").is_string()) {
            cert.target = all_characters(field);
        } else {
            for (const auto& exps : doc.at("target")) {
                cert.target.emplace_back(field, exps.get<std::vector<std::int64_t>>());
            }
        }
        for (const auto& a : doc.at("assignments")) {
            cert.assignments.push_back(
                {a.at("entry").get<std::size_t>(), Character(field, a.at("character").get<std::vector<std::int64_t>>())});
        }
        return cert;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

bool recheck_certificate(const json& doc)
{
    try {
        const std::string mode = doc.at("mode").get<std::string>();
        if (mode == "cover") {
            return verify_cover(cover_certificate_from_json(doc));
        }
        if (mode != "uncoverable") {
            throw Error(ErrorKind::Parse, "unknown certificate mode '" + mode + "'");
        }
        const Group G = parse_group(doc.at("group").get<std::string>());
        const Rank2Basis basis = standard_basis_rank2(G);
        const GSequence s = parse_sequence(G, doc.at("sequence").get<std::string>());
        CounterexampleSpec spec;
        spec.p = basis.m;
        spec.n = basis.n;
        if (s.multiplicities().size() != 4) {
            throw Error(ErrorKind::Parse, "uncoverable certificate needs four distinct elements");
        }
        std::size_t i = 0;
        for (const auto& [g, k] : s.multiplicities()) {
            if (g.coords[1] != 1) {
                throw Error(ErrorKind::Parse, "uncoverable certificate needs elements k e1 + e2");
            }
            spec.slopes[i] = g.coords[0];
            spec.multiplicities[i] = k;
            ++i;
        }
        const UncoverableReport report = verify_uncoverable(spec);
        return report.uncoverable && report.distributions_checked == doc.at("distributions_checked").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

} // namespace zsum
