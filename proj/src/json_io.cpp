#include "rmc/json_io.hpp"

namespace rmc::io {

namespace {

using gf::FieldElement;
using gf::FieldTower;
using gf::Level;
using gf::u32;
using gf::u64;

u32 take_residue(const FieldTower& t, const json& j) {
    if (!j.is_number_integer()) fail(Errc::InvalidArgument, "expected an integer coefficient");
    std::int64_t v = j.get<std::int64_t>();
    std::int64_t p = static_cast<std::int64_t>(t.p());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<u32>(r);
}

// base element: integer when e = 1, else array of e integers
std::vector<u32> base_coeffs_from_json(const FieldTower& t, const json& j) {
    std::vector<u32> out;
    if (j.is_number_integer()) {
        if (t.e() != 1) fail(Errc::InvalidArgument, "base element must be an array of length e");
        out.push_back(take_residue(t, j));
        return out;
    }
    if (!j.is_array() || j.size() > t.e())
        fail(Errc::InvalidArgument, "base element must be an array of length e");
    for (const auto& c : j) out.push_back(take_residue(t, c));
    out.resize(t.e(), 0);
    return out;
}

json base_coeffs_to_json(const FieldTower& t, const std::vector<u32>& coeffs) {
    if (t.e() == 1) return json(coeffs[0]);
    return json(coeffs);
}

}  // namespace

json field_to_json(const FieldTower& t) {
    json j;
    j["p"] = t.p();
    j["e"] = t.e();
    j["m"] = t.m();
    j["base_poly"] = t.base_poly();
    json tp = json::array();
    for (const auto& c : t.top_poly()) tp.push_back(base_coeffs_to_json(t, c));
    j["top_poly"] = tp;
    return j;
}

FieldTower field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("e") || !j.contains("m"))
        fail(Errc::InvalidArgument, "field JSON requires p, e, m");
    u64 p = j.at("p").get<u64>();
    u32 e = j.at("e").get<u32>();
    u32 m = j.at("m").get<u32>();
    std::optional<std::vector<u32>> bp;
    if (j.contains("base_poly")) {
        std::vector<u32> v;
        for (const auto& c : j.at("base_poly")) {
            std::int64_t val = c.get<std::int64_t>();
            std::int64_t r = val % static_cast<std::int64_t>(p);
            if (r < 0) r += static_cast<std::int64_t>(p);
            v.push_back(static_cast<u32>(r));
        }
        bp = std::move(v);
    }
    std::optional<std::vector<std::vector<u32>>> tp;
    if (j.contains("top_poly")) {
        // parse against a polynomial-free probe tower to reuse the base
        // element decoding (shape depends only on p, e)
        FieldTower probe = FieldTower::build(p, e, 1);
        std::vector<std::vector<u32>> v;
        for (const auto& c : j.at("top_poly")) v.push_back(base_coeffs_from_json(probe, c));
        tp = std::move(v);
    }
    return FieldTower::build(p, e, m, std::move(bp), std::move(tp));
}

json element_to_json(const FieldTower& t, const FieldElement& x) {
    switch (x.level) {
        case Level::Prime: return json(x.coeffs[0]);
        case Level::Base: return base_coeffs_to_json(t, x.coeffs);
        case Level::Top: {
            json arr = json::array();
            for (u32 blk = 0; blk < t.m(); ++blk)
                arr.push_back(base_coeffs_to_json(
                    t, std::vector<u32>(x.coeffs.begin() + blk * t.e(),
                                        x.coeffs.begin() + (blk + 1) * t.e())));
            return arr;
        }
    }
    fail(Errc::Internal, "bad level");
}

FieldElement element_from_json(const FieldTower& t, Level lvl, const json& j) {
    switch (lvl) {
        case Level::Prime: return FieldElement{Level::Prime, {take_residue(t, j)}};
        case Level::Base: return FieldElement{Level::Base, base_coeffs_from_json(t, j)};
        case Level::Top: {
            if (!j.is_array() || j.size() > t.m())
                fail(Errc::InvalidArgument, "top element must be an array of length m");
            FieldElement x = t.zero(Level::Top);
            for (std::size_t blk = 0; blk < j.size(); ++blk) {
                auto bc = base_coeffs_from_json(t, j[blk]);
                std::copy(bc.begin(), bc.end(), x.coeffs.begin() + blk * t.e());
            }
            return x;
        }
    }
    fail(Errc::Internal, "bad level");
}

json code_to_json(const codes::GabidulinCode& C) {
    json j;
    j["field"] = field_to_json(C.tower());
    j["n"] = C.n();
    json gens = json::array();
    for (std::size_t i = 0; i < C.dim(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < C.n(); ++c)
            row.push_back(element_to_json(C.tower(), C.generator().at(i, c)));
        gens.push_back(row);
    }
    j["generators"] = gens;
    return j;
}

codes::GabidulinCode code_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("generators"))
        fail(Errc::InvalidArgument, "code JSON requires field, n, generators");
    FieldTower t = field_from_json(j.at("field"));
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& rj : j.at("generators")) {
        if (!rj.is_array() || rj.size() != n)
            fail(Errc::InvalidArgument, "generator row has wrong length");
        std::vector<FieldElement> row;
        for (const auto& ej : rj) row.push_back(element_from_json(t, Level::Top, ej));
        rows.push_back(std::move(row));
    }
    linalg::Matrix G = rows.empty() ? linalg::Matrix::zero(t, Level::Top, 0, n)
                                    : linalg::Matrix::from_rows(Level::Top, n, rows);
    return codes::GabidulinCode(t, std::move(G));
}

json delsarte_to_json(const codes::DelsarteCode& D) {
    json j;
    j["field"] = field_to_json(D.tower());
    j["m"] = D.m();
    j["n"] = D.n();
    json basis = json::array();
    for (const auto& M : D.basis()) {
        json mat = json::array();
        for (std::size_t i = 0; i < D.m(); ++i) {
            json row = json::array();
            for (std::size_t c = 0; c < D.n(); ++c)
                row.push_back(element_to_json(D.tower(), M.at(i, c)));
            mat.push_back(row);
        }
        basis.push_back(mat);
    }
    j["basis"] = basis;
    return j;
}

codes::DelsarteCode delsarte_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("m") || !j.contains("n") ||
        !j.contains("basis"))
        fail(Errc::InvalidArgument, "matrix code JSON requires field, m, n, basis");
    FieldTower t = field_from_json(j.at("field"));
    std::size_t mrows = j.at("m").get<std::size_t>();
    std::size_t ncols = j.at("n").get<std::size_t>();
    std::vector<linalg::Matrix> basis;
    for (const auto& mj : j.at("basis")) {
        if (!mj.is_array() || mj.size() != mrows)
            fail(Errc::InvalidArgument, "basis matrix has wrong row count");
        std::vector<FieldElement> entries;
        for (const auto& rj : mj) {
            if (!rj.is_array() || rj.size() != ncols)
                fail(Errc::InvalidArgument, "basis matrix row has wrong length");
            for (const auto& ej : rj) entries.push_back(element_from_json(t, Level::Base, ej));
        }
        basis.emplace_back(Level::Base, mrows, ncols, std::move(entries));
    }
    return codes::DelsarteCode(t, mrows, ncols, std::move(basis));
}

json form_to_json(const FieldTower& t, const codes::BilinearFormSpec& form) {
    json j;
    switch (form.tag) {
        case codes::BilinearFormSpec::Tag::Identity: j["tag"] = "identity"; break;
        case codes::BilinearFormSpec::Tag::Hyperbolic: j["tag"] = "hyperbolic"; break;
        case codes::BilinearFormSpec::Tag::Custom: {
            j["tag"] = "custom";
            json rows = json::array();
            for (std::size_t i = 0; i < form.B.rows(); ++i) {
                json row = json::array();
                for (std::size_t c = 0; c < form.B.cols(); ++c)
                    row.push_back(element_to_json(t, form.B.at(i, c)));
                rows.push_back(row);
            }
            j["B"] = rows;
            break;
        }
    }
    return j;
}

codes::BilinearFormSpec form_from_json(const FieldTower& t, std::size_t n, const json& j) {
    if (j.is_string()) {
        std::string tag = j.get<std::string>();
        if (tag == "identity") return codes::BilinearFormSpec::identity(t, n);
        if (tag == "hyperbolic") return codes::BilinearFormSpec::hyperbolic(t, n);
        fail(Errc::InvalidArgument, "unknown form tag '" + tag + "'");
    }
    if (!j.is_object() || !j.contains("tag")) fail(Errc::InvalidArgument, "form JSON requires a tag");
    std::string tag = j.at("tag").get<std::string>();
    if (tag == "identity") return codes::BilinearFormSpec::identity(t, n);
    if (tag == "hyperbolic") return codes::BilinearFormSpec::hyperbolic(t, n);
    if (tag != "custom") fail(Errc::InvalidArgument, "unknown form tag '" + tag + "'");
    const json& bj = j.at("B");
    if (!bj.is_array() || bj.size() != n) fail(Errc::InvalidArgument, "form matrix must be n x n");
    std::vector<FieldElement> entries;
    for (const auto& rj : bj) {
        if (!rj.is_array() || rj.size() != n)
            fail(Errc::InvalidArgument, "form matrix must be n x n");
        for (const auto& ej : rj) entries.push_back(element_from_json(t, Level::Base, ej));
    }
    return codes::BilinearFormSpec::custom(t, linalg::Matrix(Level::Base, n, n, std::move(entries)));
}

json vector_to_json(const FieldTower& t, const std::vector<FieldElement>& v) {
    json j;
    j["field"] = field_to_json(t);
    json arr = json::array();
    for (const auto& x : v) arr.push_back(element_to_json(t, x));
    j["vector"] = arr;
    return j;
}

std::vector<FieldElement> vector_from_json(const FieldTower& t, const json& j) {
    const json& arr = j.is_object() ? j.at("vector") : j;
    if (!arr.is_array()) fail(Errc::InvalidArgument, "vector JSON must be an array");
    std::vector<FieldElement> v;
    for (const auto& ej : arr) v.push_back(element_from_json(t, Level::Top, ej));
    return v;
}

json basis_to_json(const FieldTower& t, const codes::LBasis& b) {
    json j;
    j["field"] = field_to_json(t);
    json arr = json::array();
    for (const auto& x : b.alpha) arr.push_back(element_to_json(t, x));
    j["alpha"] = arr;
    return j;
}

codes::LBasis basis_from_json(const FieldTower& t, const json& j) {
    const json& arr = j.is_object() ? j.at("alpha") : j;
    if (!arr.is_array()) fail(Errc::InvalidArgument, "basis JSON must carry an alpha array");
    codes::LBasis b;
    for (const auto& ej : arr) b.alpha.push_back(element_from_json(t, Level::Top, ej));
    if (!codes::is_lbasis(t, b)) fail(Errc::NotABasis, "alpha is not an F-basis of L");
    return b;
}

json report_to_json(const verify::TheoremReport& rep) {
    json j;
    j["theorem"] = rep.theorem;
    j["grid"] = rep.grid;
    j["instancesChecked"] = rep.instances_checked;
    j["counterexamples"] = rep.counterexamples;
    j["wallTimeMs"] = rep.wall_time_ms;
    j["pass"] = rep.pass();
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rmc::io
