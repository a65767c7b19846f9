#include "odlin/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace odlin {

namespace {

using nlohmann::json;

json parse_checked(const std::string& text) {
    try {
        json j = json::parse(text);
        if (!j.is_object()) throw input_error("top-level JSON value must be an object");
        if (!j.contains("format") || j["format"] != "odlin/1")
            throw input_error("missing or unsupported \"format\" (expected \"odlin/1\")");
        return j;
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

Rat rat_from(const json& v, const char* what) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw input_error(std::string(what) + ": expected an integer or a rational string");
}

Rat int_from(const json& v, const char* what) {
    Rat r = rat_from(v, what);
    if (!r.is_integer()) throw input_error(std::string(what) + ": expected an integer");
    return r;
}

RatVec vec_from(const json& v, const char* what, bool integral) {
    if (!v.is_array()) throw input_error(std::string(what) + ": expected an array");
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = integral ? int_from(v[i], what) : rat_from(v[i], what);
    return out;
}

json vec_to(const RatVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

RatMat mat_from(const json& v, const char* what, bool integral) {
    if (!v.is_array()) throw input_error(std::string(what) + ": expected an array of rows");
    std::size_t rows = v.size(), cols = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array()) throw input_error(std::string(what) + ": row is not an array");
        if (i == 0)
            cols = v[i].size();
        else if (v[i].size() != cols)
            throw input_error(std::string(what) + ": ragged rows");
    }
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = integral ? int_from(v[i][j], what) : rat_from(v[i][j], what);
    return m;
}

json mat_to(const RatMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

DataVector data_vector_from(const json& v, std::size_t dim, const char* what) {
    if (!v.is_object() || !v.contains("points"))
        throw input_error(std::string(what) + ": expected an object with \"points\"");
    std::vector<DataPoint> pts;
    for (const auto& p : v["points"]) {
        if (!p.is_object() || !p.contains("datum") || !p.contains("vec"))
            throw input_error(std::string(what) + ": point needs \"datum\" and \"vec\"");
        Rat datum = rat_from(p["datum"], what);
        RatVec value = vec_from(p["vec"], what, true);
        pts.push_back({std::move(datum), std::move(value)});
    }
    return DataVector(dim, std::move(pts));
}

json data_vector_to(const DataVector& v) {
    json pts = json::array();
    for (const auto& p : v.points()) {
        json q;
        q["datum"] = p.datum.str();
        q["vec"] = vec_to(p.value);
        pts.push_back(std::move(q));
    }
    json out;
    out["points"] = std::move(pts);
    return out;
}

std::string finish(json j) {
    j["format"] = "odlin/1";
    return j.dump(2) + "\n";
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j = parse_checked(text);
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw input_error("instance: missing integer \"dimension\"");
    std::size_t dim = j["dimension"].get<std::size_t>();
    if (!j.contains("target") || !j.contains("vectors") || !j["vectors"].is_array())
        throw input_error("instance: missing \"target\" or \"vectors\"");
    DataVector target = data_vector_from(j["target"], dim, "instance target");
    std::vector<DataVector> gens;
    for (const auto& g : j["vectors"]) gens.push_back(data_vector_from(g, dim, "instance vector"));
    return Instance(dim, std::move(target), std::move(gens));
}

std::string dump_instance(const Instance& inst) {
    json j;
    j["dimension"] = inst.dimension;
    j["target"] = data_vector_to(inst.target);
    json vs = json::array();
    for (const auto& g : inst.generators) vs.push_back(data_vector_to(g));
    j["vectors"] = std::move(vs);
    return finish(std::move(j));
}

Vas parse_vas(const std::string& text) {
    json j = parse_checked(text);
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw input_error("vas: missing integer \"dimension\"");
    std::size_t dim = j["dimension"].get<std::size_t>();
    if (!j.contains("actions") || !j["actions"].is_array())
        throw input_error("vas: missing \"actions\"");
    std::vector<RatVec> actions;
    for (const auto& a : j["actions"]) actions.push_back(vec_from(a, "vas action", true));
    RatVec init = vec_from(j.value("init", json::array()), "vas init", true);
    RatVec fin = vec_from(j.value("final", json::array()), "vas final", true);
    return Vas(dim, std::move(actions), std::move(init), std::move(fin));
}

std::string dump_vas(const Vas& vas) {
    json j;
    j["dimension"] = vas.dimension;
    json acts = json::array();
    for (const auto& a : vas.actions) {
        json row = json::array();
        for (const auto& x : a) row.push_back(x.num().get_si());
        acts.push_back(std::move(row));
    }
    j["actions"] = std::move(acts);
    json init = json::array(), fin = json::array();
    for (const auto& x : vas.init) init.push_back(x.num().get_si());
    for (const auto& x : vas.final) fin.push_back(x.num().get_si());
    j["init"] = std::move(init);
    j["final"] = std::move(fin);
    return finish(std::move(j));
}

RatMat parse_matrix_file(const std::string& text) {
    json j = parse_checked(text);
    if (!j.contains("matrix")) throw input_error("histogram file: missing \"matrix\"");
    return mat_from(j["matrix"], "matrix", false);
}

std::string dump_matrix_file(const RatMat& m) {
    json j;
    j["matrix"] = mat_to(m);
    return finish(std::move(j));
}

Multihistogram parse_multihistogram(const std::string& text) {
    json j = parse_checked(text);
    if (!j.contains("family") || !j["family"].is_array())
        throw input_error("multihistogram file: missing \"family\"");
    Multihistogram fam;
    for (const auto& m : j["family"]) fam.family.push_back(mat_from(m, "family member", false));
    return fam;
}

std::string dump_multihistogram(const Multihistogram& fam) {
    json j;
    json f = json::array();
    for (const auto& m : fam.family) f.push_back(mat_to(m));
    j["family"] = std::move(f);
    return finish(std::move(j));
}

SemiEq parse_semieq(const std::string& text) {
    json j = parse_checked(text);
    if (!j.contains("A") || !j.contains("b")) throw input_error("semieq: missing \"A\" or \"b\"");
    RatMat a = mat_from(j["A"], "A", false);
    RatVec b = vec_from(j["b"], "b", false);
    std::vector<std::pair<std::size_t, std::size_t>> impls;
    if (j.contains("implications")) {
        for (const auto& p : j["implications"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                throw input_error("semieq: implication must be a pair [i, j]");
            impls.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
        }
    }
    return SemiEq(LinSys(std::move(a), std::move(b)), std::move(impls));
}

std::string dump_semieq(const SemiEq& se) {
    json j;
    j["A"] = mat_to(se.sys.a);
    j["b"] = vec_to(se.sys.b);
    json impls = json::array();
    for (const auto& [i, k] : se.implications) impls.push_back(json::array({i, k}));
    j["implications"] = std::move(impls);
    return finish(std::move(j));
}

Witness parse_witness(const std::string& text) {
    json j = parse_checked(text);
    Witness w;
    if (!j.contains("slots") || !j["slots"].is_number_integer())
        throw input_error("witness: missing integer \"slots\"");
    w.slots = j["slots"].get<std::size_t>();
    if (!j.contains("witness") || !j["witness"].is_array())
        throw input_error("witness: missing \"witness\" array");
    for (const auto& t : j["witness"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("vector") ||
            !t.contains("placement"))
            throw input_error("witness term needs \"coeff\", \"vector\", \"placement\"");
        WitnessTerm term;
        term.coeff = rat_from(t["coeff"], "witness coeff");
        term.generator = t["vector"].get<std::size_t>();
        for (const auto& p : t["placement"]) term.placement.push_back(p.get<std::size_t>());
        w.terms.push_back(std::move(term));
    }
    return w;
}

namespace {

json witness_to_json(const Witness& w) {
    json terms = json::array();
    for (const auto& t : w.terms) {
        json term;
        term["coeff"] = t.coeff.str();
        term["vector"] = t.generator;
        term["placement"] = t.placement;
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace

std::string dump_witness(const Witness& w) {
    json j;
    j["witness"] = witness_to_json(w);
    j["slots"] = w.slots;
    return finish(std::move(j));
}

std::string dump_verdict(const Verdict& v) {
    json j;
    switch (v.status) {
        case SolveStatus::Solvable: j["status"] = "solvable"; break;
        case SolveStatus::Unsolvable: j["status"] = "unsolvable"; break;
        case SolveStatus::Unknown: j["status"] = "unknown"; break;
    }
    if (v.witness) {
        j["witness"] = witness_to_json(*v.witness);
        j["slots"] = v.witness->slots;
    }
    return finish(std::move(j));
}

std::string dump_hist_check(const HistogramCheck& chk) {
    json j;
    j["valid"] = chk.ok;
    if (chk.ok) {
        j["degree"] = chk.degree.str();
    } else {
        j["reason"] = chk.reason;
        if (chk.row >= 0) j["row"] = chk.row;
        if (chk.col >= 0) j["col"] = chk.col;
    }
    return finish(std::move(j));
}

std::string dump_decomposition(const std::vector<SimpleHistogram>& simples) {
    json j;
    json arr = json::array();
    for (const auto& s : simples) arr.push_back(mat_to(s.to_matrix()));
    j["summands"] = std::move(arr);
    return finish(std::move(j));
}

std::string dump_validity(bool valid, const std::string& reason) {
    json j;
    j["valid"] = valid;
    if (!valid) j["reason"] = reason;
    return finish(std::move(j));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

}  // namespace odlin
