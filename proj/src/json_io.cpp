#include "json_io.hpp"

#include <json.hpp>

#include "errors.hpp"

namespace crr {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json seriesJson(const QSeries& s) {
    ordered_json o = ordered_json::object();
    for (int e2 = 0; e2 <= s.trunc2(); ++e2)
        if (s.coeff2(e2) != 0) o[std::to_string(e2)] = s.coeff2(e2).str();
    return o;
}

HalfInt parseHalf(const json& v) {
    if (v.is_number_integer()) return HalfInt::whole(v.get<int>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return HalfInt::whole(std::stoi(s));
            if (s.substr(slash + 1) != "2") throw ParseError("half-integers use denominator 2");
            return HalfInt(std::stoi(s.substr(0, slash)));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad half-integer '" + s + "'");
        }
    }
    throw ParseError("expected an integer or a string like \"7/2\"");
}

ProductFactor factorFromJson(const json& f) {
    ProductFactor out;
    const std::string form = f.value("form", "geometric");
    if (form == "geometric")
        out.form = ProductFactor::Form::GeometricInverse;
    else if (form == "binomial")
        out.form = ProductFactor::Form::Binomial;
    else
        throw ParseError("product factor form must be 'geometric' or 'binomial'");
    out.modulus = f.value("modulus", 1);
    if (out.modulus < 1) throw ParseError("product factor modulus must be >= 1");
    out.residues.clear();
    if (f.contains("residues"))
        for (const auto& r : f.at("residues")) out.residues.push_back(r.get<int>() % out.modulus);
    else
        out.residues = {0};
    out.halfOffset = f.value("half_offset", false);
    return out;
}

}  // namespace

std::string partitionToJson(const ColoredPartition& pi) {
    ordered_json arr = ordered_json::array();
    for (const PartEntry& e : pi.entries()) {
        ordered_json o;
        o["value"] = e.value;
        o["color"] = pi.alphabet()->color(e.color).label;
        o["mult"] = e.mult;
        arr.push_back(o);
    }
    return arr.dump();
}

ColoredPartition partitionFromJson(const AlphabetPtr& alphabet, const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("bad partition JSON: ") + ex.what());
    }
    if (!arr.is_array()) throw ParseError("partition JSON must be an array");
    std::vector<PartEntry> entries;
    for (const auto& o : arr) {
        PartEntry e;
        e.value = o.at("value").get<int>();
        e.color = alphabet->requireLabel(o.at("color").get<std::string>());
        e.mult = o.value("mult", 1);
        entries.push_back(e);
    }
    return ColoredPartition(alphabet, std::move(entries));
}

std::string seriesToJson(const QSeries& s) { return seriesJson(s).dump(); }

std::string ruleSetToJson(const DifferenceRuleSet& d) {
    ordered_json o;
    ordered_json colors = ordered_json::array();
    for (const Color& c : d.alphabet()->colors()) colors.push_back(c.label);
    o["colors"] = colors;
    o["matrix"] = d.energy().entries();
    ordered_json extras = ordered_json::array();
    for (const ForbiddenPattern& p : d.extras()) {
        ordered_json cells = ordered_json::array();
        for (const PatternCell& c : p.cells)
            cells.push_back({c.offset, d.alphabet()->color(c.color).label});
        extras.push_back(cells);
    }
    o["extras"] = extras;
    return o.dump();
}

std::string productSideToJson(const ProductSide& ps) {
    ordered_json factors = ordered_json::array();
    for (const ProductFactor& f : ps.factors) {
        ordered_json o;
        o["form"] = f.form == ProductFactor::Form::GeometricInverse ? "geometric" : "binomial";
        o["modulus"] = f.modulus;
        o["residues"] = f.residues;
        o["half_offset"] = f.halfOffset;
        factors.push_back(o);
    }
    ordered_json out;
    out["factors"] = factors;
    return out.dump();
}

std::string reportToJson(const Report& r) {
    ordered_json o;
    o["case"] = r.caseName;
    o["order"] = r.order;
    o["verdict"] = r.verdict;
    o["sum"] = seriesJson(r.sum);
    if (r.product)
        o["product"] = seriesJson(*r.product);
    else
        o["product"] = nullptr;
    if (r.firstMismatch2)
        o["first_mismatch"] = *r.firstMismatch2;
    else
        o["first_mismatch"] = nullptr;
    o["ms"] = r.ms;
    if (!r.notes.empty()) o["notes"] = r.notes;
    if (r.oracleChecked) o["oracle"] = "agreed";
    return o.dump();
}

IdentityCase caseFromJson(const std::string& text) {
    json o;
    try {
        o = json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("bad case JSON: ") + ex.what());
    }
    if (!o.is_object()) throw ParseError("case JSON must be an object");

    const std::string name = o.value("name", "custom");

    AlphabetPtr alphabet;
    std::optional<CrystalGraph> graph;
    std::optional<EnergyMatrix> energy;

    if (o.contains("crystal")) {
        const json& cj = o.at("crystal");
        const auto labels = cj.at("colors").get<std::vector<std::string>>();
        int rank = 0;
        std::vector<std::tuple<std::string, int, std::string>> arrowSpecs;
        for (const auto& a : cj.at("arrows")) {
            if (!a.is_array() || a.size() != 3)
                throw ParseError("arrows must be [source, label, target] triples");
            arrowSpecs.emplace_back(a[0].get<std::string>(), a[1].get<int>(),
                                    a[2].get<std::string>());
            rank = std::max(rank, a[1].get<int>());
        }
        if (cj.contains("rank")) rank = cj.at("rank").get<int>();
        std::optional<Weight> theta;
        if (cj.contains("theta")) theta = Weight(cj.at("theta").get<std::vector<int>>());
        graph.emplace(buildCrystalGraph(labels, arrowSpecs,
                                        cj.at("ground").get<std::string>(), rank, theta));
        alphabet = graph->alphabet();
        energy.emplace(solveEnergy(*graph));
    } else if (o.contains("matrix")) {
        std::vector<std::string> labels = o.at("colors").get<std::vector<std::string>>();
        auto entries = o.at("matrix").get<std::vector<std::vector<int>>>();
        auto rk = deriveOrder(entries, labels);
        if (!rk) throw DomainError("no order compatible with the zero entries of E");
        int rank = 0;
        std::vector<Weight> weights(labels.size(), Weight{});
        if (o.contains("weights")) {
            const json& wj = o.at("weights");
            rank = -1;
            for (size_t i = 0; i < labels.size(); ++i) {
                auto coords = wj.at(labels[i]).get<std::vector<int>>();
                if (rank == -1) rank = static_cast<int>(coords.size());
                weights[i] = Weight(std::move(coords));
            }
            if (rank < 0) rank = 0;
        }
        std::optional<int> ground;
        std::vector<Color> colors;
        for (size_t i = 0; i < labels.size(); ++i)
            colors.push_back({static_cast<int>(i), labels[i], weights[i]});
        auto tmpAlpha = std::make_shared<const Alphabet>(colors, *rk, std::nullopt, rank);
        if (o.contains("ground")) ground = tmpAlpha->requireLabel(o.at("ground").get<std::string>());
        alphabet = std::make_shared<const Alphabet>(colors, *rk, ground, rank);
        energy.emplace(alphabet, entries);
    } else {
        throw ParseError("case JSON needs either 'crystal' or 'matrix'");
    }

    std::vector<ForbiddenPattern> extras;
    if (o.contains("extras"))
        for (const auto& pj : o.at("extras")) {
            ForbiddenPattern p;
            for (const auto& cell : pj) {
                if (!cell.is_array() || cell.size() != 2)
                    throw ParseError("pattern cells must be [offset, color] pairs");
                p.cells.push_back(
                    {cell[0].get<int>(), alphabet->requireLabel(cell[1].get<std::string>())});
            }
            extras.push_back(p);
        }

    DifferenceRuleSet rules = buildD(*energy, extras);

    Specialization spec;
    if (!o.contains("specialization"))
        throw ParseError("case JSON needs a 'specialization'");
    const json& sj = o.at("specialization");
    if (sj.is_string() || sj.contains("principal")) {
        const int m = sj.is_string() ? alphabet->rank() + 1
                                     : sj.at("principal").value("m", alphabet->rank() + 1);
        spec = Specialization::principal(alphabet, m);
    } else {
        const int m = sj.at("m").get<int>();
        std::vector<HalfInt> shifts(alphabet->size());
        for (const Color& c : alphabet->colors())
            shifts[c.id] = sj.at("shifts").contains(c.label)
                               ? parseHalf(sj.at("shifts").at(c.label))
                               : HalfInt::whole(0);
        spec = Specialization(alphabet, m, std::move(shifts));
    }

    std::optional<ProductSide> product;
    if (o.contains("product")) {
        ProductSide ps;
        for (const auto& f : o.at("product").at("factors")) ps.factors.push_back(factorFromJson(f));
        product = std::move(ps);
    }

    IdentityCase::Mode mode = IdentityCase::Mode::Explore;
    if (o.contains("mode")) {
        const std::string m = o.at("mode").get<std::string>();
        if (m == "assert")
            mode = IdentityCase::Mode::Assert;
        else if (m == "explore")
            mode = IdentityCase::Mode::Explore;
        else
            throw ParseError("mode must be 'assert' or 'explore'");
    } else if (product) {
        mode = IdentityCase::Mode::Assert;
    }
    if (mode == IdentityCase::Mode::Assert && !product)
        throw ParseError("assert mode requires a product side");

    const int defaultOrder = o.value("default_order", 20);
    return IdentityCase{name,
                        o.value("summary", std::string("user-defined case")),
                        alphabet,
                        std::move(graph),
                        std::move(*energy),
                        std::move(extras),
                        std::move(rules),
                        std::move(spec),
                        std::move(product),
                        mode,
                        defaultOrder,
                        {}};
}

std::string catalogToJson() {
    ordered_json arr = ordered_json::array();
    for (const std::string& name : catalogNames()) {
        IdentityCase c = makeCase(name);
        ordered_json o;
        o["name"] = c.name;
        o["mode"] = c.assertMode() ? "assert" : "explore";
        o["colors"] = c.alphabet->size();
        o["default_order"] = c.defaultOrder;
        o["summary"] = c.summary;
        arr.push_back(o);
    }
    return arr.dump();
}

}  // namespace crr
