#include <gtest/gtest.h>

#include "../properties.hpp"

using namespace vtest;

TEST(Invariances, GlobalPositiveScale) { EXPECT_EQ(scale_invariance_failures(1, 200), 0); }

TEST(Invariances, WithinFramePermutation) { EXPECT_EQ(token_permutation_failures(2, 200), 0); }

TEST(Invariances, FramePermutationUnderGlobalPooling) { EXPECT_EQ(frame_permutation_failures(3, 200), 0); }

TEST(Invariances, SoftmaxShift) { EXPECT_EQ(softmax_shift_failures(4, 200), 0); }
