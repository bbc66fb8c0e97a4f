#include <gtest/gtest.h>

#include <hybridspec/io.hpp>
#include <hybridspec/verify.hpp>

namespace vf = hybridspec::verify;

TEST(Verify, RegistryCoversAllCriteria) {
  const auto& r = vf::registry();
  ASSERT_EQ(r.size(), 14u);
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i].number, static_cast<int>(i + 1));
}

TEST(Verify, FilterByTagAndNumber) {
  auto w = vf::verify_suite(std::string("wedge"));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].number, 2);
  EXPECT_TRUE(w[0].passed);
  auto n = vf::verify_suite(std::string("3"));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0].tag, "three-ball");
  EXPECT_THROW(vf::verify_suite(std::string("no-such-tag")), hybridspec::Error);
}

TEST(Verify, ReportIsDeterministic) {
  auto a = vf::verify_suite(std::string("casimir"));
  auto b = vf::verify_suite(std::string("casimir"));
  EXPECT_EQ(hybridspec::io::to_json(a[0], false).dump(), hybridspec::io::to_json(b[0], false).dump());
}
