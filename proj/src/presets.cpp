#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>

#include "springer/root_datum.hpp"

namespace springer {

namespace {

using nlohmann::json;

IntVector vec(std::initializer_list<std::int64_t> xs) {
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs) v[i++] = x;
    return v;
}

std::unique_ptr<RootDatum> make_sl2() {
    auto rd = std::make_unique<RootDatum>();
    rd->name = "SL2";
    rd->cochar_rank = 1;
    rd->ssrank = 1;
    rd->cartan = IntMatrix::Constant(1, 1, 2);
    rd->simple_roots = {vec({2})};
    rd->simple_coroots = {vec({1})};
    rd->dominant_basis = {vec({1})};
    rd->omega_functional = vec({0});
    rd->omega_modulus = 1;  // trivial Omega
    rd->omega_gen_translation = vec({0});
    rd->omega_gen_word = {};
    rd->finalize();
    return rd;
}

std::unique_ptr<RootDatum> make_pgl2() {
    auto rd = std::make_unique<RootDatum>();
    rd->name = "PGL2";
    rd->cochar_rank = 1;
    rd->ssrank = 1;
    rd->cartan = IntMatrix::Constant(1, 1, 2);
    rd->simple_roots = {vec({1})};
    rd->simple_coroots = {vec({2})};
    rd->dominant_basis = {vec({1})};
    rd->omega_functional = vec({1});
    rd->omega_modulus = 2;
    rd->omega_gen_translation = vec({1});
    rd->omega_gen_word = {1};
    rd->finalize();
    return rd;
}

std::unique_ptr<RootDatum> make_gln(int n) {
    auto rd = std::make_unique<RootDatum>();
    rd->name = "GL" + std::to_string(n);
    rd->cochar_rank = n;
    rd->ssrank = n - 1;
    rd->cartan = IntMatrix::Zero(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i) {
        rd->cartan(i, i) = 2;
        if (i + 1 < n - 1) rd->cartan(i, i + 1) = -1;
        if (i - 1 >= 0) rd->cartan(i, i - 1) = -1;
    }
    for (int i = 0; i < n - 1; ++i) {
        IntVector r = IntVector::Zero(n);
        r[i] = 1;
        r[i + 1] = -1;
        rd->simple_roots.push_back(r);
        rd->simple_coroots.push_back(r);
    }
    for (int k = 1; k < n; ++k) {
        IntVector w = IntVector::Zero(n);
        for (int i = 0; i < k; ++i) w[i] = 1;
        rd->dominant_basis.push_back(w);
    }
    rd->dominant_basis.push_back(IntVector::Ones(n));
    rd->omega_functional = IntVector::Ones(n);
    rd->omega_modulus = 0;  // infinite cyclic
    IntVector e1 = IntVector::Zero(n);
    e1[0] = 1;
    rd->omega_gen_translation = e1;
    rd->omega_gen_word.clear();
    for (int i = 1; i < n; ++i) rd->omega_gen_word.push_back(i);
    rd->finalize();
    return rd;
}

std::unique_ptr<RootDatum> make_gl1() {
    auto rd = std::make_unique<RootDatum>();
    rd->name = "GL1";
    rd->cochar_rank = 1;
    rd->ssrank = 0;
    rd->cartan = IntMatrix::Zero(0, 0);
    rd->dominant_basis = {vec({1})};
    rd->omega_functional = vec({1});
    rd->omega_modulus = 0;
    rd->omega_gen_translation = vec({1});
    rd->omega_gen_word = {};
    rd->finalize();
    return rd;
}

IntVector vec_from_json(const json& j) {
    IntVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = j[i].get<std::int64_t>();
    return v;
}

std::unique_ptr<RootDatum> datum_from_json(const json& j) {
    auto rd = std::make_unique<RootDatum>();
    rd->name = j.at("name").get<std::string>();
    rd->cochar_rank = j.at("cochar_rank").get<int>();
    rd->ssrank = j.at("rank").get<int>();
    rd->cartan = IntMatrix::Zero(rd->ssrank, rd->ssrank);
    for (int i = 0; i < rd->ssrank; ++i)
        for (int k = 0; k < rd->ssrank; ++k)
            rd->cartan(i, k) = j.at("cartan")[i][k].get<std::int64_t>();
    for (const auto& r : j.at("simple_roots")) rd->simple_roots.push_back(vec_from_json(r));
    for (const auto& r : j.at("simple_coroots")) rd->simple_coroots.push_back(vec_from_json(r));
    for (const auto& r : j.at("dominant_basis")) rd->dominant_basis.push_back(vec_from_json(r));
    rd->omega_functional = vec_from_json(j.at("omega").at("functional"));
    rd->omega_modulus = j.at("omega").at("modulus").get<long>();
    rd->omega_gen_translation = vec_from_json(j.at("omega").at("generator_translation"));
    for (const auto& w : j.at("omega").at("generator_word"))
        rd->omega_gen_word.push_back(w.get<int>());
    rd->finalize();
    return rd;
}

struct Registry {
    std::map<std::string, std::unique_ptr<RootDatum>> data;
    std::mutex mu;
};

Registry& registry() {
    static Registry reg;
    return reg;
}

std::unique_ptr<RootDatum> build_preset(const std::string& name) {
    if (name == "SL2") return make_sl2();
    if (name == "PGL2") return make_pgl2();
    if (name == "GL1") return make_gl1();
    if (name == "GL2") return make_gln(2);
    if (name == "GL3") return make_gln(3);
    if (name == "GL4") return make_gln(4);
    return nullptr;
}

std::string& flag_dir() {
    static std::string dir;
    return dir;
}

// Resolution order: --data flag, HECKE_SPRINGER_DATA, ./data; the compiled
// presets are the final fallback.
std::unique_ptr<RootDatum> load_from_files(const std::string& name) {
    std::vector<std::string> dirs;
    if (!flag_dir().empty()) dirs.push_back(flag_dir());
    if (const char* env = std::getenv("HECKE_SPRINGER_DATA")) dirs.push_back(env);
    dirs.push_back("data");
    for (const auto& dir : dirs) {
        std::ifstream in(dir + "/" + name + ".json");
        if (!in) continue;
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed root datum file for " + name);
        return datum_from_json(j);
    }
    return nullptr;
}

}  // namespace

const RootDatum* RootDatum::preset(const std::string& name) {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.data.find(name);
    if (it != reg.data.end()) return it->second.get();
    auto built = load_from_files(name);
    if (!built) built = build_preset(name);
    if (!built) throw DomainError("UnknownDatum", "no root datum preset named " + name);
    if (built->name != name)
        throw ParseError("datum file for " + name + " declares name " + built->name);
    const RootDatum* out = built.get();
    reg.data.emplace(name, std::move(built));
    return out;
}

void RootDatum::set_data_directory(const std::string& dir) {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    flag_dir() = dir;
    reg.data.clear();  // directory change invalidates cached lookups
}

std::vector<std::string> RootDatum::preset_names() {
    return {"SL2", "PGL2", "GL1", "GL2", "GL3", "GL4"};
}

std::unique_ptr<RootDatum> RootDatum::from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed root datum JSON");
    return datum_from_json(j);
}

}  // namespace springer
