#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "curate/embeddings.hpp"
#include "support.hpp"

using namespace curate;
namespace ct = curate::testing;
using ct::TempDir;

namespace {

TEST(LoadEmbeddings, NormalizesOnLoad) {
  TempDir dir("emb");
  ct::write_file(dir / "e.txt", "a 1 0\nb 0 2\n");
  const auto t = load_embeddings(dir / "e.txt");
  EXPECT_EQ(t.dimension(), 2u);
  EXPECT_EQ(t.vocab_size(), 2u);
  const auto a = *t.lookup("a");
  const auto b = *t.lookup("b");
  EXPECT_FLOAT_EQ(a[0], 1.0f);
  EXPECT_FLOAT_EQ(a[1], 0.0f);
  EXPECT_FLOAT_EQ(b[0], 0.0f);
  EXPECT_FLOAT_EQ(b[1], 1.0f);
}

TEST(LoadEmbeddings, InconsistentDimensionNamesLine) {
  TempDir dir("emb");
  ct::write_file(dir / "e.txt", "a 1 0\nb 1 2 3\n");
  try {
    load_embeddings(dir / "e.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
}

TEST(LoadEmbeddings, EmptyFileAndBadNumbersAreFatal) {
  TempDir dir("emb");
  ct::write_file(dir / "empty.txt", "\n\n");
  EXPECT_THROW(load_embeddings(dir / "empty.txt"), ParseError);
  ct::write_file(dir / "bad.txt", "a 1 x\n");
  EXPECT_THROW(load_embeddings(dir / "bad.txt"), ParseError);
  EXPECT_THROW(load_embeddings(dir / "missing.txt"), IoError);
}

TEST(LoadEmbeddings, ZeroVectorsDropped) {
  TempDir dir("emb");
  ct::write_file(dir / "e.txt", "a 1 0\nz 0 0\nb 0 1\n");
  const auto t = load_embeddings(dir / "e.txt");
  EXPECT_EQ(t.vocab_size(), 2u);
  EXPECT_EQ(t.dropped_zero_vectors(), 1u);
  EXPECT_FALSE(t.lookup("z"));
}

TEST(LoadEmbeddings, SkipsFastTextHeader) {
  TempDir dir("emb");
  ct::write_file(dir / "e.vec", "2 3\nx 1 2 2\ny 0 0 5\n");
  const auto t = load_embeddings(dir / "e.vec");
  EXPECT_EQ(t.dimension(), 3u);
  EXPECT_EQ(t.vocab_size(), 2u);
}

TEST(Lookup, AbsentWordIsNotFound) {
  EmbeddingTable t;
  t.add("a", std::vector<double>{1.0, 0.0});
  EXPECT_TRUE(t.lookup("a"));
  EXPECT_FALSE(t.lookup("zzz-absent"));
  EXPECT_FALSE(t.lookup("A"));  // keys are case sensitive
}

// vocab_size checked against an independent line count of the written file.
TEST(LoadEmbeddings, ThreeHundredDimFileMatchesLineCount) {
  TempDir dir("emb");
  Rng rng(11);
  std::vector<ct::WordVector> rows;
  for (int i = 0; i < 3000; ++i) {
    std::vector<double> v(300);
    if (i % 500 != 7) {
      for (auto& x : v) x = rng.normal();
    }
    rows.push_back({"w" + std::to_string(i), v});
  }
  ct::write_embedding_file(dir / "e300.txt", rows);
  const std::string body = ct::read_file(dir / "e300.txt");
  const auto lines = static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n'));
  std::size_t zero_lines = 0;
  for (const auto& r : rows) zero_lines += std::all_of(r.values.begin(), r.values.end(), [](double x) { return x == 0; });

  const auto t = load_embeddings(dir / "e300.txt");
  EXPECT_EQ(t.dimension(), 300u);
  EXPECT_EQ(zero_lines, 6u);
  EXPECT_EQ(t.vocab_size(), lines - zero_lines);
  for (std::size_t i = 0; i < t.vocab_size(); ++i) {
    double n = 0;
    for (float x : t.row(i)) n += double(x) * x;
    ASSERT_NEAR(std::sqrt(n), 1.0, 1e-6);
  }
}

TEST(LoadEmbeddings, NormalizationIsIdempotentAndLoadDeterministic) {
  TempDir dir("emb");
  const auto rows = ct::make_residual_world(5, 200, 40, 0.3);
  ct::write_embedding_file(dir / "e.txt", rows);
  const auto t1 = load_embeddings(dir / "e.txt");
  const auto t2 = load_embeddings(dir / "e.txt");
  ASSERT_EQ(t1.vocab_size(), t2.vocab_size());
  for (std::size_t i = 0; i < t1.vocab_size(); ++i) {
    ASSERT_EQ(t1.word(i), t2.word(i));
    const auto r1 = t1.row(i);
    const auto r2 = t2.row(i);
    ASSERT_TRUE(std::equal(r1.begin(), r1.end(), r2.begin()));
    Vector v = to_vector(r1);
    const double n = norm(v);
    for (std::size_t k = 0; k < v.size(); ++k) ASSERT_NEAR(v[k] / n, v[k], 1e-6);
  }
}

double time_lookups(const EmbeddingTable& t, const std::vector<std::string>& keys, std::size_t count) {
  std::size_t hits = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < count; ++i) hits += t.lookup(keys[i & 1023]).has_value();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(hits, count);
  return s;
}

EmbeddingTable table_of_size(std::size_t vocab) {
  EmbeddingTable t;
  std::vector<double> v{1.0, 0.5, 0.25, 0.125};
  for (std::size_t i = 0; i < vocab; ++i) t.add("w" + std::to_string(i), v);
  return t;
}

std::vector<std::string> keys_for(std::size_t vocab) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < 1024; ++i) keys.push_back("w" + std::to_string((i * 7919) % vocab));
  return keys;
}

// Lookup cost grows with lookup count, not with vocabulary size. The three
// measurements are interleaved and the best of several rounds is kept.
TEST(Lookup, TimingIsLinearInCountAndFlatInVocab) {
  const auto small = table_of_size(20000);
  const auto large = table_of_size(40000);
  const auto small_keys = keys_for(20000);
  const auto large_keys = keys_for(40000);
  double t_small = 1e30, t_large = 1e30, t_double = 1e30;
  for (int round = 0; round < 7; ++round) {
    t_small = std::min(t_small, time_lookups(small, small_keys, 1000000));
    t_large = std::min(t_large, time_lookups(large, large_keys, 1000000));
    t_double = std::min(t_double, time_lookups(small, small_keys, 2000000));
  }
  EXPECT_LT(t_large / t_small, 1.5) << t_small << " vs " << t_large;
  EXPECT_GT(t_double / t_small, 1.4);
  EXPECT_LT(t_double / t_small, 2.6);
}

}  // namespace
