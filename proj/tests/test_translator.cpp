#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "proslm/errors.hpp"
#include "proslm/llm_client.hpp"
#include "proslm/percepts.hpp"
#include "proslm/prompts.hpp"
#include "proslm/translator.hpp"

using namespace proslm;

namespace {

// Fake client that records every request and replays a scripted sequence
// of replies, for asserting on rendered prompts and call counts.
struct RecordingClient : LlmClient {
    std::vector<ChatRequest> requests;
    std::vector<std::string> script;
    size_t at = 0;

    explicit RecordingClient(std::vector<std::string> replies) : script(std::move(replies)) {}

    std::string complete(const ChatRequest& req) override {
        requests.push_back(req);
        if (at >= script.size())
            throw ClientError(ClientError::Kind::StubMiss, "script exhausted");
        return script[at++];
    }
};

const ClockReading kMonday{1100, "monday", 1};

}  // namespace

TEST_CASE("cleaning strips fences, brackets, quotes, and trailing periods") {
    auto items = clean_llm_list("```python\n['status(pool, 1100, monday, Y)']\n```");
    REQUIRE(items.size() == 1);
    CHECK(items[0] == "status(pool, 1100, monday, Y)");

    items = clean_llm_list(R"(["a(b).", 'c(d).'])");
    REQUIRE(items.size() == 2);
    CHECK(items[0] == "a(b)");
    CHECK(items[1] == "c(d)");

    items = clean_llm_list("- a(b)\n- c(d)\nplain(e)\n");
    REQUIRE(items.size() == 3);
    CHECK(items[0] == "a(b)");
    CHECK(items[1] == "c(d)");
    CHECK(items[2] == "plain(e)");
}

TEST_CASE("cleaning respects nesting and quoted commas when splitting") {
    auto items = clean_llm_list("[f(a, b), g([1, 2], X)]");
    REQUIRE(items.size() == 2);
    CHECK(items[0] == "f(a, b)");
    CHECK(items[1] == "g([1, 2], X)");

    items = clean_llm_list("['a, b', 'c']");
    REQUIRE(items.size() == 2);
    CHECK(items[0] == "a, b");
    CHECK(items[1] == "c");
}

TEST_CASE("cleaning preserves order, invents nothing, and handles empties") {
    CHECK(clean_llm_list("").empty());
    CHECK(clean_llm_list("   \n  ").empty());
    CHECK(clean_llm_list("[]").empty());
    CHECK(clean_llm_list("[  ]").empty());
    CHECK(clean_llm_list("```\n```").empty());

    auto items = clean_llm_list("['z(1)', 'a(2)', 'm(3)']");
    REQUIRE(items.size() == 3);
    CHECK(items[0] == "z(1)");
    CHECK(items[1] == "a(2)");
    CHECK(items[2] == "m(3)");
}

TEST_CASE("cleaning is idempotent per item") {
    auto once = clean_llm_list("['status(pool, 1100, monday, Y).']");
    REQUIRE(once.size() == 1);
    auto twice = clean_llm_list(once[0]);
    REQUIRE(twice.size() == 1);
    CHECK(twice[0] == once[0]);
}

TEST_CASE("unbalanced replies raise cleaning errors that carry the raw text") {
    const std::string raw = "['status(pool)'";
    try {
        clean_llm_list(raw);
        FAIL("expected CleaningError");
    } catch (const CleaningError& e) {
        CHECK(e.raw == raw);
        CHECK(std::string(e.what()).find("never closed") != std::string::npos);
    }

    CHECK_THROWS_AS(clean_llm_list("[a)]"), CleaningError);
    CHECK_THROWS_AS(clean_llm_list("['a]"), CleaningError);
}

TEST_CASE("context lines append a truth tag only for validation items") {
    CHECK(Translator::context_line({"Y = [quiet, wifi]", std::nullopt}) == "Y = [quiet, wifi]");
    CHECK(Translator::context_line({"dining_hall(crown_merrill)", true}) ==
          "dining_hall(crown_merrill), {truth: 'True'}");
    CHECK(Translator::context_line({"number_of_dining_halls(3)", false}) ==
          "number_of_dining_halls(3), {truth: 'False'}");
}

TEST_CASE("question translation renders domain, clock, and vocabulary into the prompt") {
    RecordingClient client({"['status(pool, 1100, monday, Y)']"});
    PromptStore prompts = PromptStore::load("prompts");
    Translator tr(client, prompts, "ucsc");

    TranslationResult res =
        tr.nl_query_to_goals("Is the pool busy?", kMonday, {"status/4", "isOpen/3"});

    CHECK(res.raw == "['status(pool, 1100, monday, Y)']");
    REQUIRE(res.goals.size() == 1);
    CHECK(res.goals[0] == "status(pool, 1100, monday, Y)");
    CHECK(res.parse_failures.empty());

    REQUIRE(client.requests.size() == 1);
    const ChatRequest& req = client.requests[0];
    CHECK(req.temperature == 0.0);
    REQUIRE(req.messages.size() == 2);
    CHECK(req.messages[0].role == "system");
    CHECK(req.messages[0].content.find("ucsc") != std::string::npos);
    CHECK(req.messages[0].content.find("hour 1100 on monday, month 1") != std::string::npos);
    CHECK(req.messages[0].content.find("status/4, isOpen/3") != std::string::npos);
    CHECK(req.messages[1].role == "user");
    CHECK(req.messages[1].content == "Is the pool busy?");
}

TEST_CASE("an empty vocabulary renders a placeholder instead of nothing") {
    RecordingClient client({"['p(a)']"});
    PromptStore prompts = PromptStore::load("prompts");
    Translator tr(client, prompts, "ucsc");
    tr.nl_query_to_goals("Anything?", kMonday, {});
    CHECK(client.requests[0].messages[0].content.find("(no predicates loaded)") !=
          std::string::npos);
}

TEST_CASE("every extracted item lands in goals or parse failures") {
    RecordingClient client({"['status(pool)', 'not a goal ((', 'isOpen(pool, 1100)']"});
    PromptStore prompts = PromptStore::load("prompts");
    Translator tr(client, prompts, "ucsc");

    TranslationResult res = tr.nl_query_to_goals("Mixed?", kMonday, {"status/1"});
    CHECK(res.goals.size() + res.parse_failures.size() == 3);
    REQUIRE(res.goals.size() == 2);
    CHECK(res.goals[0] == "status(pool)");
    CHECK(res.goals[1] == "isOpen(pool, 1100)");
    REQUIRE(res.parse_failures.size() == 1);
    CHECK(res.parse_failures[0].first == "not a goal ((");
    CHECK_FALSE(res.parse_failures[0].second.empty());
}

TEST_CASE("translations with no usable goals raise the empty-translation error") {
    PromptStore prompts = PromptStore::load("prompts");

    RecordingClient none({"[]"});
    Translator tr_none(none, prompts, "ucsc");
    CHECK_THROWS_AS(tr_none.nl_query_to_goals("Q?", kMonday, {}), TranslationEmptyError);

    RecordingClient junk({"['(((']"});
    Translator tr_junk(junk, prompts, "ucsc");
    try {
        tr_junk.nl_query_to_goals("Q?", kMonday, {});
        FAIL("expected TranslationEmptyError");
    } catch (const TranslationEmptyError& e) {
        CHECK(std::string(e.what()).find("(((") != std::string::npos);
    }
}

TEST_CASE("blank inputs are rejected before any client call") {
    RecordingClient client({});
    PromptStore prompts = PromptStore::load("prompts");
    Translator tr(client, prompts, "ucsc");
    CHECK_THROWS_AS(tr.nl_query_to_goals("   ", kMonday, {}), std::invalid_argument);
    CHECK_THROWS_AS(tr.nl_facts_to_goals(""), std::invalid_argument);
    CHECK(client.requests.empty());
}

TEST_CASE("fact translation keeps ground goals and flags the rest") {
    RecordingClient client(
        {"['dining_hall(cowell).', 'dining_hall(X)', 'number_of_dining_halls(3).']"});
    PromptStore prompts = PromptStore::load("prompts");
    Translator tr(client, prompts, "ucsc");

    TranslationResult res = tr.nl_facts_to_goals("There are three dining halls.");
    REQUIRE(res.goals.size() == 2);
    CHECK(res.goals[0] == "dining_hall(cowell)");
    CHECK(res.goals[1] == "number_of_dining_halls(3)");
    REQUIRE(res.parse_failures.size() == 1);
    CHECK(res.parse_failures[0].first == "dining_hall(X)");
    CHECK(res.parse_failures[0].second == "non-ground");

    // Fact extraction has no clock or vocabulary to inject.
    CHECK(client.requests[0].messages[0].content.find("hour ") == std::string::npos);
}

TEST_CASE("context items translate one client call per item, in order") {
    RecordingClient client({"['The study spot is quiet', 'The study spot has wifi']",
                            "['Crown Merrill is a dining hall']"});
    PromptStore prompts = PromptStore::load("prompts");
    Translator tr(client, prompts, "ucsc");

    std::vector<ContextItem> items = {{"Y = [quiet, wifi]", std::nullopt},
                                      {"dining_hall(crown_merrill)", true}};
    std::vector<std::string> out = tr.goals_to_nl(items);

    REQUIRE(out.size() == 3);
    CHECK(out[0] == "The study spot is quiet");
    CHECK(out[1] == "The study spot has wifi");
    CHECK(out[2] == "Crown Merrill is a dining hall");

    REQUIRE(client.requests.size() == 2);
    CHECK(client.requests[0].messages[1].content == "Y = [quiet, wifi]");
    CHECK(client.requests[1].messages[1].content == "dining_hall(crown_merrill), {truth: 'True'}");
    CHECK(client.requests[0].temperature == 0.0);
    CHECK(tr.goals_to_nl({}).empty());
}

TEST_CASE("the prompt budget applies to translation requests") {
    RecordingClient client({"['p(a)']"});
    PromptStore prompts = PromptStore::load("prompts");
    Translator tr(client, prompts, "ucsc", /*max_prompt_chars=*/20);
    CHECK_THROWS_AS(tr.nl_query_to_goals("Is the pool busy?", kMonday, {}), PromptTooLargeError);
    CHECK(client.requests.empty());
}
