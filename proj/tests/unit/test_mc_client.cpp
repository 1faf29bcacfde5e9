#include <doctest.h>

#include <map>

#include "brickforge/error.hpp"
#include "brickforge/net/mc_client.hpp"
#include "support/mock_server.hpp"

using namespace brickforge;
using testsupport::MockMcServer;

namespace {

CommandList fiveCellArtifactCommands() {
    Space3D space = build3D({8, 8, 8});
    for (int i = 0; i < 5; ++i) space.put({1, 1, 1}, "RED", {i, 0, 0});
    return buildCommands(space, defaultPalette(), nullptr, McPlacement{});
}

// A connection whose transport fails after a fixed number of writes.
class FlakyConnection : public McConnection {
public:
    explicit FlakyConnection(std::size_t failOnWrite) : failOn_(failOnWrite) {
        setBatchSize(1);
    }

protected:
    void writeAll(std::string_view) override {
        if (++writes_ >= failOn_) {
            throw Error(ErrorKind::Connection, "injected failure");
        }
    }

private:
    std::size_t failOn_;
    std::size_t writes_ = 0;
};

}  // namespace

TEST_CASE("sendCommands delivers lines verbatim") {
    MockMcServer server;
    CommandList commands = fiveCellArtifactCommands();
    {
        McConnection conn = McConnection::connect("127.0.0.1", server.port());
        CHECK(conn.sendCommands(commands) == 6);
    }
    server.waitForSession();
    CHECK(server.bytes() == commands.text());
    auto lines = server.lines();
    REQUIRE(lines.size() == 6);
    CHECK(lines[0].rfind("player.setPos(", 0) == 0);
    CHECK(lines == commands.lines);
}

TEST_CASE("empty command list writes nothing") {
    MockMcServer server;
    {
        McConnection conn = McConnection::connect("127.0.0.1", server.port());
        CHECK(conn.sendCommands(CommandList{}) == 0);
    }
    server.waitForSession();
    CHECK(server.bytes().empty());
}

TEST_CASE("mid-stream failure reports lines already sent") {
    FlakyConnection conn(4);  // 4th write fails
    CommandList commands = fiveCellArtifactCommands();
    try {
        conn.sendCommands(commands);
        FAIL("expected a partial-send error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PartialSend);
        CHECK(e.progress() == 3);
    }
}

TEST_CASE("server closing early surfaces as a partial send") {
    MockMcServer server(/*closeAfterLines=*/3);
    CommandList commands;
    for (int i = 0; i < 50000; ++i) {
        commands.lines.push_back("world.setBlock(" + std::to_string(i) + ",0,0,35,14)");
    }
    bool partial = false;
    std::size_t progress = 0;
    try {
        McConnection conn = McConnection::connect("127.0.0.1", server.port());
        conn.setBatchSize(100);
        conn.sendCommands(commands);
    } catch (const Error& e) {
        partial = e.kind() == ErrorKind::PartialSend;
        progress = e.progress();
    }
    CHECK(partial);
    CHECK(progress < commands.lines.size());
}

TEST_CASE("connect errors") {
    SUBCASE("refused port") {
        std::uint16_t deadPort = 1;
        {
            MockMcServer probe;  // grab a free port, then release it
            deadPort = probe.port();
        }
        try {
            McConnection::connect("127.0.0.1", deadPort, std::chrono::milliseconds(2000));
            FAIL("expected a connection error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Connection);
            CHECK(std::string(e.what()).find("127.0.0.1") != std::string::npos);
        }
    }
    SUBCASE("unreachable address times out or is rejected") {
        try {
            // TEST-NET-1 is reserved and should not answer.
            McConnection::connect("192.0.2.1", 4711, std::chrono::milliseconds(300));
            FAIL("expected a connection error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Connection);
        }
    }
}

TEST_CASE("buildArtifact composes build and send") {
    SUBCASE("five cells means six wire lines") {
        MockMcServer server;
        Space3D space = build3D({8, 8, 8});
        for (int i = 0; i < 5; ++i) space.put({1, 1, 1}, "RED", {i, 0, 0});
        {
            McConnection conn = McConnection::connect("127.0.0.1", server.port());
            CHECK(buildArtifact(conn, space, defaultPalette(), nullptr, McPlacement{}) == 6);
        }
        server.waitForSession();
        auto lines = server.lines();
        REQUIRE(lines.size() == 6);
        CHECK(lines[0].rfind("player.setPos(", 0) == 0);
    }
    SUBCASE("capacity failure sends nothing") {
        MockMcServer server;
        Space3D over = build3D({75, 75, 81});
        over.put({75, 75, 81}, "RED", {0, 0, 0});  // 455625 cells
        {
            McConnection conn = McConnection::connect("127.0.0.1", server.port());
            CHECK_THROWS_AS(
                buildArtifact(conn, over, defaultPalette(), nullptr, McPlacement{}), Error);
        }
        server.waitForSession();
        CHECK(server.bytes().empty());
    }
    SUBCASE("unknown brick sends nothing") {
        MockMcServer server;
        Space3D space = build3D({2, 2, 2});
        space.put({1, 1, 1}, "RED", {0, 0, 0});
        Palette noRed = loadPalette("BLUE,1,3005.dat,35,11\n");
        {
            McConnection conn = McConnection::connect("127.0.0.1", server.port());
            CHECK_THROWS_AS(buildArtifact(conn, space, noRed, nullptr, McPlacement{}), Error);
        }
        server.waitForSession();
        CHECK(server.bytes().empty());
    }
}

TEST_CASE("eraseArtifact sends one setBlocks air line") {
    MockMcServer server;
    {
        McConnection conn = McConnection::connect("127.0.0.1", server.port());
        Space3D space = build3D({4, 4, 4});
        space.put({2, 2, 2}, "RED", {0, 0, 0});
        buildArtifact(conn, space, defaultPalette(), nullptr, McPlacement{});
        CHECK(eraseArtifact(conn, {{0, 0, 0}, {9, 9, 9}}, McPlacement{}) == 1);
        CHECK_THROWS_AS(eraseArtifact(conn, {{5, 0, 0}, {0, 0, 0}}, McPlacement{}), Error);
    }
    server.waitForSession();
    auto lines = server.lines();
    REQUIRE(!lines.empty());
    CHECK(lines.back() == "world.setBlocks(0,0,0,9,9,9,0,0)");
}

TEST_CASE("replaying a command list is idempotent on world state") {
    CommandList commands = fiveCellArtifactCommands();
    auto applyTo = [](std::map<std::string, std::pair<int, int>>& world,
                      const CommandList& cmds) {
        for (const std::string& line : cmds.lines) {
            int x, y, z, id, data;
            if (std::sscanf(line.c_str(), "world.setBlock(%d,%d,%d,%d,%d)", &x, &y, &z, &id,
                            &data) == 5) {
                world[std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z)] = {
                    id, data};
            }
        }
    };
    std::map<std::string, std::pair<int, int>> once, twice;
    applyTo(once, commands);
    applyTo(twice, commands);
    applyTo(twice, commands);
    CHECK(once == twice);
}
