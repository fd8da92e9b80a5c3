#include "pclique/bundle.hpp"

#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pclique/errors.hpp"
#include "pclique/graph_io.hpp"

namespace pclique::io {

using nlohmann::json;

void write_bundle(std::ostream& out, const PlantedInstance& inst) {
    json header;
    header["schema"] = kInstanceSchema;
    header["params"] = {{"n", inst.params.n}, {"p", inst.params.p}, {"k", inst.params.k}, {"seed", inst.params.seed}};
    header["strategy"] = std::string(to_string(inst.adversary.strategy));
    header["t_size"] = inst.adversary.t_size;
    header["draws"] = inst.adversary.draws;
    header["T"] = inst.adversary.T ? inst.adversary.T->to_vector() : std::vector<Vertex>{};
    header["K"] = inst.K.to_vector();
    out << header.dump() << '\n';
    write_edge_list(out, inst.planted);
}

PlantedInstance read_bundle(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("bundle: empty input");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bundle: bad JSON header: ") + e.what());
    }
    if (header.value("schema", "") != kInstanceSchema) throw FormatError("bundle: unsupported schema");

    PlantedInstance inst;
    try {
        const auto& prm = header.at("params");
        inst.params.n = prm.at("n").get<std::size_t>();
        inst.params.p = prm.at("p").get<double>();
        inst.params.k = prm.at("k").get<std::size_t>();
        inst.params.seed = prm.at("seed").get<std::uint64_t>();
        inst.adversary.strategy = strategy_from_string(header.at("strategy").get<std::string>());
        inst.adversary.t_size = header.at("t_size").get<std::size_t>();
        inst.adversary.draws = header.at("draws").get<std::size_t>();
        auto T = header.at("T").get<std::vector<Vertex>>();
        if (inst.adversary.strategy == Strategy::CommonNeighborhood) inst.adversary.T = VertexSet(inst.params.n, T);
        auto K = header.at("K").get<std::vector<Vertex>>();
        for (Vertex v : K) {
            if (v >= inst.params.n) throw FormatError("bundle: K member out of range");
        }
        inst.K = VertexSet(inst.params.n, K);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bundle: malformed header: ") + e.what());
    }
    inst.planted = read_edge_list(in);
    if (inst.planted.order() != inst.params.n) throw FormatError("bundle: header n disagrees with edge list");
    inst.base = sample_gnp(inst.params.n, inst.params.p, inst.params.seed);
    if (!audit_instance(inst)) throw FormatError("bundle: planted graph is not the seeded base plus K");
    return inst;
}

LoadedInput load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    const int first = (in >> std::ws).peek();
    LoadedInput out;
    if (first == '{') {
        out.instance = read_bundle(in);
        out.graph = out.instance->planted;
        return out;
    }
    std::string tok;
    in >> tok;
    in.seekg(0);
    out.graph = (tok == "p" || tok == "c") ? read_dimacs(in) : read_edge_list(in);
    return out;
}

}  // namespace pclique::io
