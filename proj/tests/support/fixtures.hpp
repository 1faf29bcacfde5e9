#pragma once

namespace testsupport {

// The two-bar flag program: a 37x28 red field crossed by 4-wide white bars.
inline constexpr const char* kFlagProgram = R"((* generated by Bricklayer Lite version 0.9 *)

open Level_3;

fun flag (x,z) =
	(
		put2D (37,28) RED (0,0);
		put2D (4,28) WHITE (12,0);
		put2D (37,4) WHITE (0,12)
	);

build2D (64,64);

flag(0,0);

show2D "flag";
)";

}  // namespace testsupport
