#include "move/serialize.hpp"

#include <charconv>
#include <fstream>

#include "move/errors.hpp"

namespace move {

const cppn::Genome& RunRecord::elite_genome(std::uint64_t uid) const {
    for (const auto& g : elites)
        if (g.uid == uid) return g;
    throw std::out_of_range("run record: no stored genome with uid " + std::to_string(uid));
}

Json genome_to_json(const cppn::Genome& g) {
    Json j;
    j["uid"] = g.uid;
    if (g.parent_uid)
        j["parent_uid"] = *g.parent_uid;
    else
        j["parent_uid"] = nullptr;
    Json nodes = Json::array();
    for (const auto& n : g.nodes) {
        const char* role = n.role == cppn::NodeRole::Input    ? "input"
                           : n.role == cppn::NodeRole::Hidden ? "hidden"
                                                              : "output";
        nodes.push_back({{"id", n.node_id}, {"act", cppn::to_string(n.activation)}, {"role", role}});
    }
    j["nodes"] = std::move(nodes);
    Json conns = Json::array();
    for (const auto& c : g.connections)
        conns.push_back({{"src", c.source}, {"dst", c.sink}, {"w", c.weight}, {"on", c.enabled}});
    j["connections"] = std::move(conns);
    return j;
}

cppn::Genome genome_from_json(const Json& j) {
    cppn::Genome g;
    g.uid = j.at("uid").get<std::uint64_t>();
    if (!j.at("parent_uid").is_null()) g.parent_uid = j.at("parent_uid").get<std::uint64_t>();
    for (const auto& n : j.at("nodes")) {
        cppn::NodeGene node;
        node.node_id = n.at("id").get<int>();
        node.activation = cppn::activation_from_string(n.at("act").get<std::string>());
        const std::string role = n.at("role").get<std::string>();
        node.role = role == "input"    ? cppn::NodeRole::Input
                    : role == "hidden" ? cppn::NodeRole::Hidden
                                       : cppn::NodeRole::Output;
        g.nodes.push_back(node);
    }
    for (const auto& c : j.at("connections")) {
        g.connections.push_back({c.at("src").get<int>(), c.at("dst").get<int>(),
                                 c.at("w").get<double>(), c.at("on").get<bool>()});
    }
    cppn::validate_genome(g);
    return g;
}

Json lineage_to_json(const LineageLog& log) {
    Json j;
    Json events = Json::array();
    for (const auto& ev : log.events())
        events.push_back({ev.generation, ev.parent_cell, ev.target_cell, ev.margin, ev.child_uid});
    j["events"] = std::move(events);
    Json registry = Json::array();
    for (const auto& rec : log.registry()) {
        Json r = Json::array();
        r.push_back(rec.uid);
        r.push_back(rec.parent_uid ? Json(*rec.parent_uid) : Json(nullptr));
        r.push_back(rec.birth_generation);
        r.push_back(rec.seed_cell ? Json(*rec.seed_cell) : Json(nullptr));
        registry.push_back(std::move(r));
    }
    j["registry"] = std::move(registry);
    return j;
}

LineageLog lineage_from_json(const Json& j) {
    LineageLog log;
    for (const auto& r : j.at("registry")) {
        GenomeRecord rec;
        rec.uid = r.at(0).get<std::uint64_t>();
        if (!r.at(1).is_null()) rec.parent_uid = r.at(1).get<std::uint64_t>();
        rec.birth_generation = r.at(2).get<int>();
        if (!r.at(3).is_null()) rec.seed_cell = r.at(3).get<int>();
        log.register_genome(rec);
    }
    for (const auto& e : j.at("events")) {
        log.append_event({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                          e.at(3).get<int>(), e.at(4).get<std::uint64_t>()});
    }
    return log;
}

Json run_record_to_json(const RunRecord& rec) {
    Json j;
    j["schema"] = "move.run/1";
    j["kind"] = rec.kind;
    j["condition_id"] = rec.condition_id;
    j["trial"] = rec.trial;
    j["seed"] = rec.seed;
    j["target_id"] = rec.target_id;

    Json cond;
    cond["num_cells"] = rec.num_cells;
    cond["functions_per_cell"] = rec.functions_per_cell;
    cond["generations"] = rec.generations;
    cond["jump_policy"] = to_string(rec.policy);
    cond["image_width"] = rec.image_width;
    cond["image_height"] = rec.image_height;
    cond["objectives"] = rec.objective_names;
    cond["children_per_generation"] = rec.children_per_generation;
    cond["scope_objective"] = rec.scope_objective;
    j["condition"] = std::move(cond);

    Json cells = Json::array();
    for (int i = 0; i < rec.map.num_cells(); ++i) {
        Json c;
        c["id"] = i;
        c["subset"] = rec.map.subsets[static_cast<std::size_t>(i)];
        c["elite_uid"] = rec.map.elite_uids[static_cast<std::size_t>(i)];
        c["elite_scores"] = rec.map.elite_scores[static_cast<std::size_t>(i)];
        cells.push_back(std::move(c));
    }
    j["map"] = std::move(cells);

    Json elites = Json::array();
    for (const auto& g : rec.elites) elites.push_back(genome_to_json(g));
    j["elites"] = std::move(elites);

    j["lineage"] = lineage_to_json(rec.log);

    Json per_gen;
    Json evals = Json::array(), reps = Json::array(), jumps = Json::array();
    for (const auto& g : rec.per_generation) {
        evals.push_back(g.evaluations);
        reps.push_back(g.replacements);
        jumps.push_back(g.jumps);
    }
    per_gen["evaluations"] = std::move(evals);
    per_gen["replacements"] = std::move(reps);
    per_gen["jumps"] = std::move(jumps);
    j["per_generation"] = std::move(per_gen);

    j["observed_max"] = rec.observed.max;
    j["observed_min"] = rec.observed.min;
    j["seed_evaluations"] = rec.seed_evaluations;
    return j;
}

RunRecord run_record_from_json(const Json& j) {
    if (j.value("schema", "") != "move.run/1")
        throw IoError("run record: unknown or missing schema tag");
    RunRecord rec;
    rec.kind = j.at("kind").get<std::string>();
    rec.condition_id = j.at("condition_id").get<std::string>();
    rec.trial = j.at("trial").get<int>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.target_id = j.at("target_id").get<std::string>();

    const auto& cond = j.at("condition");
    rec.num_cells = cond.at("num_cells").get<int>();
    rec.functions_per_cell = cond.at("functions_per_cell").get<int>();
    rec.generations = cond.at("generations").get<int>();
    rec.policy = jump_policy_from_string(cond.at("jump_policy").get<std::string>());
    rec.image_width = cond.at("image_width").get<int>();
    rec.image_height = cond.at("image_height").get<int>();
    rec.objective_names = cond.at("objectives").get<std::vector<std::string>>();
    rec.children_per_generation = cond.at("children_per_generation").get<int>();
    rec.scope_objective = cond.at("scope_objective").get<int>();

    for (const auto& c : j.at("map")) {
        rec.map.subsets.push_back(c.at("subset").get<ObjectiveSubset>());
        rec.map.elite_uids.push_back(c.at("elite_uid").get<std::uint64_t>());
        rec.map.elite_scores.push_back(c.at("elite_scores").get<FitnessVector>());
    }
    for (const auto& g : j.at("elites")) rec.elites.push_back(genome_from_json(g));
    rec.log = lineage_from_json(j.at("lineage"));

    const auto& per_gen = j.at("per_generation");
    const auto evals = per_gen.at("evaluations").get<std::vector<long>>();
    const auto reps = per_gen.at("replacements").get<std::vector<long>>();
    const auto jumps = per_gen.at("jumps").get<std::vector<long>>();
    for (std::size_t i = 0; i < evals.size(); ++i)
        rec.per_generation.push_back({evals[i], reps[i], jumps[i]});

    rec.observed.max = j.at("observed_max").get<FitnessVector>();
    rec.observed.min = j.at("observed_min").get<FitnessVector>();
    rec.seed_evaluations = j.at("seed_evaluations").get<long>();
    return rec;
}

Json table_to_json(const NormalizationTable& table) {
    Json j;
    j["schema"] = "move.norm/1";
    Json targets;
    for (const auto& [target, per_obj] : table.entries) {
        Json objs;
        for (const auto& [name, entry] : per_obj)
            objs[name] = {{"best", entry.best}, {"floor", entry.floor}};
        targets[target] = std::move(objs);
    }
    j["targets"] = std::move(targets);
    j["provenance"] = table.provenance;
    return j;
}

NormalizationTable table_from_json(const Json& j) {
    if (j.value("schema", "") != "move.norm/1")
        throw IoError("normalization table: unknown or missing schema tag");
    NormalizationTable table;
    for (const auto& [target, objs] : j.at("targets").items()) {
        for (const auto& [name, entry] : objs.items()) {
            table.entries[target][name] = {entry.at("best").get<double>(),
                                           entry.at("floor").get<double>()};
        }
    }
    table.provenance = j.at("provenance").get<std::vector<std::string>>();
    return table;
}

void write_json_file(const Json& j, const std::string& path, int indent) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << j.dump(indent);
    out << '\n';
    if (!out) throw IoError("failed writing: " + path);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace move
