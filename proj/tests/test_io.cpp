#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pclique/bundle.hpp"
#include "pclique/errors.hpp"
#include "pclique/graph_io.hpp"
#include "pclique/serialize.hpp"

using namespace pclique;

TEST_CASE("bundle round trip keeps ground truth") {
    for (Strategy s : {Strategy::Random, Strategy::CommonNeighborhood, Strategy::LowDegree,
                       Strategy::IndependentRandom}) {
        const PlantedInstance inst = generate({.n = 80, .p = 0.5, .k = 12, .seed = 17}, s, 2);
        std::stringstream buf;
        io::write_bundle(buf, inst);
        const PlantedInstance back = io::read_bundle(buf);
        CHECK(back.planted == inst.planted);
        CHECK(back.base == inst.base);
        CHECK(back.K == inst.K);
        CHECK(back.adversary.strategy == s);
        CHECK(back.adversary.T == inst.adversary.T);
        CHECK(back.params.seed == 17);
    }
}

TEST_CASE("bundle header records T") {
    const PlantedInstance inst = generate({.n = 100, .p = 0.5, .k = 5, .seed = 3}, Strategy::CommonNeighborhood, 5);
    std::stringstream buf;
    io::write_bundle(buf, inst);
    std::string header;
    std::getline(buf, header);
    const auto j = io::Json::parse(header);
    CHECK(j["schema"] == io::kInstanceSchema);
    CHECK(j["T"].size() == 5);
    CHECK(j["t_size"] == 5);
}

TEST_CASE("a tampered bundle fails its audit") {
    const PlantedInstance inst = generate({.n = 30, .p = 0.5, .k = 6, .seed = 3}, Strategy::Random);
    std::stringstream buf;
    io::write_bundle(buf, inst);
    std::string header;
    std::getline(buf, header);
    std::stringstream tampered;
    tampered << header << "\n" << "30 0\n";
    CHECK_THROWS_AS(io::read_bundle(tampered), FormatError);
}

TEST_CASE("load_input detects the format") {
    const auto dir = std::filesystem::temp_directory_path() / "pclique_io_test";
    std::filesystem::create_directories(dir);
    const Graph g = named::cycle(6);
    {
        std::ofstream f(dir / "g.txt");
        io::write_edge_list(f, g);
    }
    {
        std::ofstream f(dir / "g.dimacs");
        f << "c comment\n";
        io::write_dimacs(f, g);
    }
    const PlantedInstance inst = generate({.n = 20, .p = 0.5, .k = 4, .seed = 1}, Strategy::Random);
    {
        std::ofstream f(dir / "b.pcb");
        io::write_bundle(f, inst);
    }
    CHECK(io::load_input((dir / "g.txt").string()).graph == g);
    CHECK(!io::load_input((dir / "g.txt").string()).instance.has_value());
    CHECK(io::load_input((dir / "g.dimacs").string()).graph == g);
    const io::LoadedInput b = io::load_input((dir / "b.pcb").string());
    REQUIRE(b.instance.has_value());
    CHECK(b.instance->K == inst.K);
    CHECK_THROWS_AS(io::load_input((dir / "missing").string()), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("report schemas") {
    CHECK(io::to_json(VertexSet(5, {4, 1})) == io::Json::array({1, 4}));
    RecoveryReport rep;
    rep.algorithm = "theta";
    rep.clique = VertexSet(3, {0, 1});
    rep.H = rep.F = VertexSet(3);
    const io::Json j = io::to_json(rep);
    CHECK(j["schema"] == io::kRecoverySchema);
    CHECK(!j.contains("s_used"));
    rep.algorithm = "guess";
    CHECK(io::to_json(rep).contains("s_used"));
}
