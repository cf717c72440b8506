#include "diag12/report_json.hpp"

#include <set>
#include <stdexcept>

#include "diag12/units.hpp"

namespace diag12 {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json witness_to_json(const Witness& witness) {
    return std::visit(
        [](const auto& w) -> ordered_json {
            using W = std::decay_t<decltype(w)>;
            ordered_json out;
            if constexpr (std::is_same_v<W, InversePairWitness>) {
                out["kind"] = "inverse_pair";
                out["a"] = w.a.value();
                out["b"] = w.b.value();
            } else if constexpr (std::is_same_v<W, NonInvolutiveResidue>) {
                out["kind"] = "non_involutive_unit";
                out["unit"] = w.unit.value();
                out["square"] = (w.unit * w.unit).value();
            } else {
                out["kind"] = "non_involutive_unit";
                out["unit"] = to_string(w.unit);
                out["square"] = to_string(w.unit * w.unit);
            }
            return out;
        },
        witness);
}

[[noreturn]] void schema_error(const std::string& what) {
    throw std::invalid_argument("report schema violation: " + what);
}

void only_keys(const json& object, std::initializer_list<const char*> allowed, const std::string& where) {
    std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto& [key, _] : object.items()) {
        if (!names.contains(key)) schema_error("unexpected field '" + key + "' in " + where);
    }
}

const json& field(const json& object, const char* name, const std::string& where) {
    auto it = object.find(name);
    if (it == object.end()) schema_error("missing field '" + std::string(name) + "' in " + where);
    return *it;
}

std::uint64_t unsigned_field(const json& object, const char* name, const std::string& where) {
    const json& v = field(object, name, where);
    if (!v.is_number_unsigned()) schema_error("'" + std::string(name) + "' in " + where + " must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

Residue residue_field(const json& object, const char* name, const RingSpec& ring) {
    std::uint64_t v = unsigned_field(object, name, "witness");
    if (v >= ring.modulus()) schema_error("witness residue " + std::to_string(v) + " is not reduced");
    return Residue::from_canonical(ring, v);
}

Witness witness_from_json(const json& w, const RingDescription& ring_desc) {
    if (!w.is_object()) schema_error("witness must be an object");
    const json& kind = field(w, "kind", "witness");
    if (!kind.is_string()) schema_error("witness kind must be a string");
    const RingSpec ring = RingSpec::make(static_cast<std::int64_t>(ring_desc.modulus));

    if (kind == "inverse_pair") {
        if (ring_desc.is_polynomial()) schema_error("inverse_pair witnesses belong to Z_n reports");
        only_keys(w, {"kind", "a", "b"}, "witness");
        return InversePairWitness{residue_field(w, "a", ring), residue_field(w, "b", ring)};
    }
    if (kind == "non_involutive_unit") {
        only_keys(w, {"kind", "unit", "square"}, "witness");
        if (!ring_desc.is_polynomial()) return NonInvolutiveResidue{residue_field(w, "unit", ring)};
        const json& text = field(w, "unit", "witness");
        if (!text.is_string()) schema_error("polynomial witness must be a string");
        try {
            return NonInvolutivePolynomial{parse_polynomial(text.get<std::string>(), ring, *ring_desc.vars)};
        } catch (const ParseError& e) {
            schema_error(std::string("witness polynomial: ") + e.what());
        }
    }
    schema_error("unknown witness kind " + kind.dump());
}

} // namespace

ordered_json report_to_json(const DiagonalReport& report) {
    ordered_json out;
    out["schema"] = kReportSchemaVersion;
    ordered_json ring;
    ring["n"] = report.ring.modulus;
    if (report.ring.vars) ring["vars"] = *report.ring.vars;
    if (report.ring.degree_bound) ring["degree_bound"] = *report.ring.degree_bound;
    out["ring"] = std::move(ring);
    out["verdict"] = report.verdict;
    out["method"] = method_name(report.method);
    if (report.witness) out["witness"] = witness_to_json(*report.witness);
    if (report.search_bound_note) out["search_bound_note"] = *report.search_bound_note;
    return out;
}

DiagonalReport report_from_json(const json& document) {
    if (!document.is_object()) schema_error("report must be an object");
    only_keys(document, {"schema", "ring", "verdict", "method", "witness", "search_bound_note"}, "report");
    if (unsigned_field(document, "schema", "report") != kReportSchemaVersion) schema_error("unsupported schema version");

    DiagonalReport report;
    const json& ring = field(document, "ring", "report");
    if (!ring.is_object()) schema_error("ring must be an object");
    only_keys(ring, {"n", "vars", "degree_bound"}, "ring");
    report.ring.modulus = unsigned_field(ring, "n", "ring");
    if (report.ring.modulus == 0 ||
        report.ring.modulus > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        schema_error("ring modulus out of range");
    }
    if (ring.contains("vars")) {
        report.ring.vars = unsigned_field(ring, "vars", "ring");
        if (*report.ring.vars == 0) schema_error("vars must be positive");
    }
    if (ring.contains("degree_bound")) {
        if (!report.ring.vars) schema_error("degree_bound requires vars");
        report.ring.degree_bound = unsigned_field(ring, "degree_bound", "ring");
    }

    const json& verdict = field(document, "verdict", "report");
    if (!verdict.is_boolean()) schema_error("verdict must be a boolean");
    report.verdict = verdict.get<bool>();

    const json& method = field(document, "method", "report");
    if (!method.is_string()) schema_error("method must be a string");
    auto parsed = parse_method_name(method.get<std::string>());
    if (!parsed) schema_error("unknown method " + method.dump());
    report.method = *parsed;

    if (auto it = document.find("witness"); it != document.end()) {
        report.witness = witness_from_json(*it, report.ring);
    }
    if (auto it = document.find("search_bound_note"); it != document.end()) {
        if (!it->is_string()) schema_error("search_bound_note must be a string");
        report.search_bound_note = it->get<std::string>();
    }
    return report;
}

} // namespace diag12
