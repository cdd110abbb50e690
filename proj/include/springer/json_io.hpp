#pragma once

#include <json.hpp>

#include "springer/block_getzler.hpp"
#include "springer/dg_algebra.hpp"
#include "springer/dl_params.hpp"
#include "springer/gln_blocks.hpp"
#include "springer/hecke.hpp"
#include "springer/steinberg_sl2.hpp"

namespace springer::io {

using nlohmann::json;

// MultiLaurent <-> {"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
inline json to_json(const MultiLaurent& f) {
    json j;
    j["vars"] = f.vars();
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["exp"] = e;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline MultiLaurent laurent_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiLaurent f;
    for (const auto& t : j.at("terms")) {
        ExponentVec e = t.at("exp").get<ExponentVec>();
        Rational c = rational_from_strings(t.at("num").get<std::string>(),
                                           t.at("den").get<std::string>());
        f += MultiLaurent::term(vars, e, c);
    }
    return f;
}

inline json to_json(const RationalFunction& f) {
    json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

inline RationalFunction rational_function_from_json(const json& j) {
    return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

// ExtAffineElement <-> {"lambda": [...], "word": [...]} over a named datum;
// the word lists finite simple indices.
inline json to_json(const ExtAffineElement& x) {
    json j;
    j["lambda"] = std::vector<std::int64_t>(
        x.translation_part().data(),
        x.translation_part().data() + x.translation_part().size());
    j["word"] = x.finite_part().word();
    return j;
}

inline ExtAffineElement element_from_json(const RootDatum* rd, const json& j) {
    auto lv = j.at("lambda").get<std::vector<std::int64_t>>();
    if (static_cast<int>(lv.size()) != rd->cochar_rank)
        throw ParseError("lambda has wrong rank for " + rd->name);
    IntVector lambda(rd->cochar_rank);
    for (int i = 0; i < rd->cochar_rank; ++i) lambda[i] = lv[i];
    WeylElement w(rd);
    for (int i : j.at("word").get<std::vector<int>>()) {
        if (i < 1 || i > rd->ssrank) throw ParseError("simple index out of range");
        w = w * WeylElement::simple(rd, i);
    }
    return ExtAffineElement(lambda, w);
}

// HeckeElement <-> {"datum": "...", "terms": [{"lambda": [...], "word": [...],
//                   "coeff": {MultiLaurent}}]}
inline json to_json(const HeckeElement& h) {
    json j;
    j["datum"] = h.datum()->name;
    json terms = json::array();
    for (const auto& [x, c] : h.support()) {
        json t = to_json(x);
        t["coeff"] = to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline HeckeElement hecke_from_json(const json& j) {
    const RootDatum* rd = RootDatum::preset(j.at("datum").get<std::string>());
    HeckeElement h(rd);
    for (const auto& t : j.at("terms"))
        h.add_term(element_from_json(rd, t), laurent_from_json(t.at("coeff")));
    return h;
}

inline json to_json(const SpecializedElement& s) {
    json j;
    j["datum"] = s.datum->name;
    json terms = json::array();
    for (const auto& [x, c] : s.support) {
        json t = to_json(x);
        t["coeff"] = {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline json to_json(const sl2::FixedPointClass& c) {
    json j;
    const char* names[2] = {"e", "s"};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            j[std::string(names[x]) + "," + names[y]] = to_json(c.at(x, y));
    return j;
}

inline json to_json(const sl2::ModelCheckReport& r) {
    json j;
    j["convention"] = r.convention == sl2::QConvention::a ? "a" : "b";
    j["all_pass"] = r.all_pass;
    json checks = json::array();
    for (const auto& e : r.entries) {
        json c;
        c["name"] = e.name;
        c["pass"] = e.pass;
        if (!e.detail.empty()) c["detail"] = e.detail;
        checks.push_back(c);
    }
    j["checks"] = checks;
    return j;
}

inline json to_json(const HHRanks& r) {
    json j;
    json per_degree = json::object();
    for (const auto& [d, rank] : r.total_by_degree) per_degree[std::to_string(d)] = rank;
    j["ranks_by_degree"] = per_degree;
    json per_slice = json::array();
    for (const auto& [key, rank] : r.by_slice_degree) {
        per_slice.push_back(
            json{{"weight", key.first}, {"degree", key.second}, {"rank", rank}});
    }
    j["ranks_by_slice"] = per_slice;
    j["certified_max_degree"] = r.certified_max_degree;
    j["all_slices_exact"] = r.all_slices_exact;
    return j;
}

inline json to_json(const dl::DLParameterGLn& p) {
    json segs = json::array();
    for (const auto& s : p.segments)
        segs.push_back({{"orbit", s.orbit}, {"start", s.start}, {"length", s.length}});
    return {{"segments", segs}};
}

inline json to_json(const dl::SL2ParameterRow& r) {
    return {{"n", dl::stratum_name(r.n_stratum)},
            {"component_group", dl::group_name(r.component_group)},
            {"gm_component_group", dl::group_name(r.gm_component_group)},
            {"geometry", r.geometry_label},
            {"centralizer", r.centralizer}};
}

inline json to_json(const blocks::BlockDescriptor& d) {
    json j;
    j["levi_blocks"] = d.levi_blocks;
    json hf = json::array();
    for (const auto& f : d.hecke_factors)
        hf.push_back({{"parameter_exponent", f.parameter_exponent}, {"rank", f.rank}});
    j["hecke_factors"] = hf;
    json mf = json::array();
    for (const auto& f : d.moduli_factors)
        mf.push_back({{"field_degree", f.field_degree}, {"rank", f.rank}});
    j["moduli_factors"] = mf;
    j["springer_sheaf_note"] = d.springer_sheaf_note;
    return j;
}

inline blocks::InertialTypeSpec type_from_json(const json& j) {
    blocks::InertialTypeSpec spec;
    spec.n = j.at("n").get<int>();
    for (const auto& e : j.at("entries"))
        spec.entries.push_back({e.at("label").get<std::string>(), e.at("d").get<int>(),
                                e.at("r").get<int>(), e.at("n_eta").get<int>()});
    return spec;
}

inline json to_json(const blocks::InertialTypeSpec& spec) {
    json entries = json::array();
    for (const auto& e : spec.entries)
        entries.push_back(
            {{"label", e.label}, {"d", e.d}, {"r", e.r}, {"n_eta", e.n_eta}});
    return {{"n", spec.n}, {"entries", entries}};
}

inline std::vector<blocks::CatalogShape> catalog_from_json(const json& j) {
    std::vector<blocks::CatalogShape> out;
    for (const auto& s : j.at("shapes"))
        out.push_back({s.at("d").get<int>(), s.at("r").get<int>()});
    return out;
}

inline DgAlgebraSpec dg_spec_from_json(const json& j) {
    DgAlgebraSpec spec;
    for (const auto& g : j.at("generators"))
        spec.generators.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>(),
                                   g.at("weight").get<int>()});
    auto gen_index = [&](const std::string& name) {
        for (int i = 0; i < spec.count(); ++i)
            if (spec.generators[i].name == name) return i;
        throw ParseError("unknown generator " + name);
    };
    if (j.contains("differential")) {
        for (const auto& d : j.at("differential")) {
            int gi = gen_index(d.at("generator").get<std::string>());
            DgAlgebraSpec::Element img;
            for (const auto& term : d.at("image")) {
                DgAlgebraSpec::Monomial m = spec.unit_monomial();
                for (const auto& [name, e] : term.at("monomial").items())
                    m[gen_index(name)] = e.get<int>();
                DgAlgebraSpec::add_to(img, m, parse_rational(term.at("coeff").get<std::string>()));
            }
            spec.differential[gi] = img;
        }
    }
    spec.validate();
    return spec;
}

// A lambda descriptor from CLI text: "1", "-1", "i", "sqrt-q", "generic",
// or an exact rational.
inline dl::LambdaDesc lambda_from_text(const std::string& text) {
    if (text == "i") return dl::LambdaDesc::i();
    if (text == "sqrt-q") return dl::LambdaDesc::sqrtq();
    if (text == "generic") return dl::LambdaDesc::generic();
    return dl::LambdaDesc::exact(parse_rational(text));
}

inline dl::QMode qmode_from_text(const std::string& text) {
    if (text == "generic") return dl::QMode::generic_q();
    return dl::QMode::exact(parse_rational(text));
}

}  // namespace springer::io
