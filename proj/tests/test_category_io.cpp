#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "scae/category_io.hpp"

using namespace scae;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path temp_file(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("scae_io_test_" + std::to_string(getpid()));
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(CategoryIo, RoundTripIsByteIdentical)
{
    for (const auto& [f, rank, level] : {std::tuple{Family::A, 3, 2}, {Family::A, 5, 2}, {Family::D, 4, 2}}) {
        const auto data = build_wzw_data(f, rank, level);
        const auto path = temp_file(data.name + ".json");
        save_category(data, path);
        const auto loaded = load_category(path);
        EXPECT_TRUE(verify_axioms(loaded.ring));
        EXPECT_EQ(loaded.name, data.name);
        EXPECT_EQ(loaded.ring, data.ring);
        EXPECT_EQ(loaded.twist, data.twist);
        EXPECT_EQ(serialize(loaded), read_file(path));
    }
}

TEST(CategoryIo, KeysAreSorted)
{
    const auto text = serialize(build_wzw_data(Family::A, 1, 1));
    const std::vector<std::string> keys{"\"dual\"", "\"fusion\"", "\"qdims\"", "\"schema_version\"",
                                        "\"simples\"", "\"source\"", "\"twists\""};
    std::size_t last = 0;
    for (const auto& k : keys) {
        const auto pos = text.find(k);
        ASSERT_NE(pos, std::string::npos) << k;
        EXPECT_GT(pos, last) << k;
        last = pos;
    }
}

TEST(CategoryIo, ExternalCategoryLoads)
{
    const auto d = load_category(std::string(SCAE_TEST_DATA) + "/ising.json");
    EXPECT_EQ(d.size(), 3u);
    EXPECT_FALSE(d.source);
    EXPECT_EQ(d.name, "external[3]");
    EXPECT_EQ(d.twist[1], RationalAngle(1, 16));
    EXPECT_EQ(parse_category(serialize(d)).ring, d.ring);
}

TEST(CategoryIo, MalformedInputsAreInputErrors)
{
    const std::string good = read_file(std::string(SCAE_TEST_DATA) + "/ising.json");
    EXPECT_THROW(parse_category("{"), InputError);
    EXPECT_THROW(parse_category("{}"), InputError);
    auto patch = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        const auto pos = s.find(from);
        EXPECT_NE(pos, std::string::npos) << from;
        return s.replace(pos, from.size(), to);
    };
    EXPECT_THROW(parse_category(patch("\"schema_version\":1", "\"schema_version\":2")), InputError);
    EXPECT_THROW(parse_category(patch("\"external\"", "\"elsewhere\"")), InputError);
    EXPECT_THROW(parse_category(patch("[1,1,2,1]", "[1,1,2,0]")), InputError);
    EXPECT_THROW(parse_category(patch("[1,1,2,1]", "[1,1,2,2]")), InputError);     // breaks associativity
    EXPECT_THROW(parse_category(patch("[1,16]", "[1,0]")), InputError);           // zero denominator
    EXPECT_THROW(parse_category(patch("[0,1],[1,16]", "[1,3],[1,16]")), InputError); // unit twist
    EXPECT_THROW(parse_category(patch("1.4142135623730951,1.0]", "1.4142135623730951]")), InputError);
    EXPECT_THROW(parse_category(patch("[2,2,0,1]", "[2,2,0,1,9]")), InputError);
    EXPECT_THROW(load_category("/nonexistent/category.json"), InputError);
    EXPECT_NO_THROW(parse_category(good));
}
