#include <gtest/gtest.h>

#include "wikidb/wikitext.hpp"

namespace wikidb {
namespace {

std::vector<RawParagraph> segment(std::string_view text, std::vector<HeadingMark> marks) {
  return segment_paragraphs(text, marks);
}

TEST(SegmentParagraphs, NoHeadingsGivesOneLeadParagraph) {
  EXPECT_EQ(segment("hello", {}), (std::vector<RawParagraph>{{0, 4, 1}}));
}

TEST(SegmentParagraphs, LeadIsTrimmedToVisibleCharacters) {
  EXPECT_EQ(segment("  hi  \n", {}), (std::vector<RawParagraph>{{2, 3, 1}}));
}

TEST(SegmentParagraphs, WhitespaceOnlyTextHasNoParagraphs) {
  EXPECT_TRUE(segment(" \n\t ", {}).empty());
  EXPECT_TRUE(segment("", {}).empty());
}

TEST(SegmentParagraphs, LevelsFollowFenceWidth) {
  // "lead\nA\nx\nB\ny" with headings A (==) at 5 and B (===) at 9.
  const auto p = segment("lead\nA\nx\nB\ny", {{5, 2}, {9, 3}});
  EXPECT_EQ(p, (std::vector<RawParagraph>{{0, 3, 1}, {5, 7, 1}, {9, 11, 2}}));
}

TEST(SegmentParagraphs, SingleEqualsFenceClampsToOne) {
  const auto p = segment("A\nx", {{0, 1}});
  EXPECT_EQ(p, (std::vector<RawParagraph>{{0, 2, 1}}));
}

TEST(SegmentParagraphs, NoLeadWhenTextStartsWithHeading) {
  const auto p = segment("\nA\nbody", {{1, 4}});
  EXPECT_EQ(p, (std::vector<RawParagraph>{{1, 6, 3}}));
}

TEST(SegmentParagraphs, MultiByteTextUsesCodePointOffsets) {
  const auto p = segment("été\nÉ\nß", {{4, 2}});
  EXPECT_EQ(p, (std::vector<RawParagraph>{{0, 2, 1}, {4, 6, 1}}));
}

}  // namespace
}  // namespace wikidb
