/*
 * Copyright 2026 The modkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Generated by tools/embed_data.py from data/. Do not edit.

#pragma once

#include <string_view>

namespace modkit::bundled {

inline constexpr std::string_view k_stopwords = R"modkit(# Baseline English stop words (179 entries, the common research list).
# Shorthand extensions are configured separately.
i
me
my
myself
we
our
ours
ourselves
you
you're
you've
you'll
you'd
your
yours
yourself
yourselves
he
him
his
himself
she
she's
her
hers
herself
it
it's
its
itself
they
them
their
theirs
themselves
what
which
who
whom
this
that
that'll
these
those
am
is
are
was
were
be
been
being
have
has
had
having
do
does
did
doing
a
an
the
and
but
if
or
because
as
until
while
of
at
by
for
with
about
against
between
into
through
during
before
after
above
below
to
from
up
down
in
out
on
off
over
under
again
further
then
once
here
there
when
where
why
how
all
any
both
each
few
more
most
other
some
such
no
nor
not
only
own
same
so
than
too
very
s
t
can
will
just
don
don't
should
should've
now
d
ll
m
o
re
ve
y
ain
aren
aren't
couldn
couldn't
didn
didn't
doesn
doesn't
hadn
hadn't
hasn
hasn't
haven
haven't
isn
isn't
ma
mightn
mightn't
mustn
mustn't
needn
needn't
shan
shan't
shouldn
shouldn't
wasn
wasn't
weren
weren't
won
won't
wouldn
wouldn't
)modkit";

inline constexpr std::string_view k_emoticons = R"modkit(# emoticon<TAB>emoji alias; matched case-insensitively on whitespace-bounded chunks
:)	slightly_smiling_face
:-)	slightly_smiling_face
(:	slightly_smiling_face
=)	slightly_smiling_face
:]	slightly_smiling_face
:))	smiling_face_with_smiling_eyes
:-))	smiling_face_with_smiling_eyes
:(	slightly_frowning_face
:-(	slightly_frowning_face
):	slightly_frowning_face
=(	slightly_frowning_face
:((	frowning_face
:'(	crying_face
:'-(	crying_face
:'((	loudly_crying_face
:')	face_with_tears_of_joy
:D	grinning_face_with_big_eyes
:-D	grinning_face_with_big_eyes
=D	grinning_face_with_big_eyes
;)	winking_face
;-)	winking_face
;D	winking_face
:P	face_with_tongue
:-P	face_with_tongue
;P	winking_face_with_tongue
:O	face_with_open_mouth
:-O	face_with_open_mouth
:/	confused_face
:-/	confused_face
:\	confused_face
:|	neutral_face
:-|	neutral_face
:*	face_blowing_a_kiss
:-*	face_blowing_a_kiss
<3	red_heart
<33	red_heart
</3	broken_heart
:@	enraged_face
>:(	angry_face
>:-(	angry_face
D:	anguished_face
:S	confounded_face
o.O	flushed_face
O.o	flushed_face
-_-	expressionless_face
-.-	expressionless_face
^_^	smiling_face_with_smiling_eyes
^^	smiling_face_with_smiling_eyes
T_T	loudly_crying_face
;_;	loudly_crying_face
:3	smiling_cat_with_heart_eyes
B)	smiling_face_with_sunglasses
8)	smiling_face_with_sunglasses
:$	flushed_face
)modkit";

inline constexpr std::string_view k_emoji_aliases = R"modkit(# emoji<TAB>alias (CLDR short names, snake_case)
ℹ	information
↔	left_right_arrow
↕	up_down_arrow
↖	up_left_arrow
↗	up_right_arrow
↘	down_right_arrow
↙	down_left_arrow
↩	right_arrow_curving_left
↪	left_arrow_curving_right
⌚	watch
⌛	hourglass_done
⌨	keyboard
⏏	eject_button
⏩	fast_forward_button
⏪	fast_reverse_button
⏫	fast_up_button
⏬	fast_down_button
⏭	next_track_button
⏮	last_track_button
⏯	play_or_pause_button
⏰	alarm_clock
⏱	stopwatch
⏲	timer_clock
⏳	hourglass_not_done
⏸	pause_button
⏹	stop_button
⏺	record_button
Ⓜ	circled_m
▪	black_small_square
▫	white_small_square
▶	play_button
◀	reverse_button
◻	white_medium_square
◼	black_medium_square
◽	white_medium_small_square
◾	black_medium_small_square
☀	sun
☁	cloud
☂	umbrella
☃	snowman
☄	comet
☎	telephone
☑	check_box_with_check
☔	umbrella_with_rain_drops
☕	hot_beverage
☘	shamrock
☝	index_pointing_up
☠	skull_and_crossbones
☢	radioactive
☣	biohazard
☦	orthodox_cross
☪	star_and_crescent
☮	peace_symbol
☯	yin_yang
☸	wheel_of_dharma
☹	frowning_face
☺	smiling_face
♀	female_sign
♂	male_sign
♈	aries
♉	taurus
♊	gemini
♋	cancer
♌	leo
♍	virgo
♎	libra
♏	scorpio
♐	sagittarius
♑	capricorn
♒	aquarius
♓	pisces
♟	chess_pawn
♠	spade_suit
♣	club_suit
♥	heart_suit
♦	diamond_suit
♨	hot_springs
♻	recycling_symbol
♾	infinity
♿	wheelchair_symbol
⚒	hammer_and_pick
⚓	anchor
⚔	crossed_swords
⚕	medical_symbol
⚖	balance_scale
⚗	alembic
⚙	gear
⚛	atom_symbol
⚜	fleur_de_lis
⚠	warning
⚡	high_voltage
⚧	transgender_symbol
⚪	white_circle
⚫	black_circle
⚰	coffin
⚱	funeral_urn
⚽	soccer_ball
⚾	baseball
⛄	snowman_without_snow
⛅	sun_behind_cloud
⛈	cloud_with_lightning_and_rain
⛎	ophiuchus
⛏	pick
⛑	rescue_worker_s_helmet
⛓	chains
⛔	no_entry
⛩	shinto_shrine
⛪	church
⛰	mountain
⛱	umbrella_on_ground
⛲	fountain
⛳	flag_in_hole
⛴	ferry
⛵	sailboat
⛷	skier
⛸	ice_skate
⛹	person_bouncing_ball
⛺	tent
⛽	fuel_pump
✂	scissors
✅	check_mark_button
✈	airplane
✉	envelope
✊	raised_fist
✋	raised_hand
✌	victory_hand
✍	writing_hand
✏	pencil
✒	black_nib
✔	check_mark
✖	multiply
✝	latin_cross
✡	star_of_david
✨	sparkles
✳	eight_spoked_asterisk
✴	eight_pointed_star
❄	snowflake
❇	sparkle
❌	cross_mark
❎	cross_mark_button
❓	red_question_mark
❔	white_question_mark
❕	white_exclamation_mark
❗	red_exclamation_mark
❣	heart_exclamation
❤	red_heart
➕	plus
➖	minus
➗	divide
➡	right_arrow
➰	curly_loop
➿	double_curly_loop
⤴	right_arrow_curving_up
⤵	right_arrow_curving_down
⬅	left_arrow
⬆	up_arrow
⬇	down_arrow
⬛	black_large_square
⬜	white_large_square
⭐	star
⭕	hollow_red_circle
〰	wavy_dash
〽	part_alternation_mark
㊗	japanese_congratulations_button
㊙	japanese_secret_button
🀄	mahjong_red_dragon
🃏	joker
🅰	a_button_blood_type
🅱	b_button_blood_type
🅾	o_button_blood_type
🅿	p_button
🆎	ab_button_blood_type
🆑	cl_button
🆒	cool_button
🆓	free_button
🆔	id_button
🆕	new_button
🆖	ng_button
🆗	ok_button
🆘	sos_button
🆙	up_button
🆚	vs_button
🈁	japanese_here_button
🈂	japanese_service_charge_button
🈚	japanese_free_of_charge_button
🈯	japanese_reserved_button
🈲	japanese_prohibited_button
🈳	japanese_vacancy_button
🈴	japanese_passing_grade_button
🈵	japanese_no_vacancy_button
🈶	japanese_not_free_of_charge_button
🈷	japanese_monthly_amount_button
🈸	japanese_application_button
🈹	japanese_discount_button
🈺	japanese_open_for_business_button
🉐	japanese_bargain_button
🉑	japanese_acceptable_button
🌀	cyclone
🌁	foggy
🌂	closed_umbrella
🌃	night_with_stars
🌄	sunrise_over_mountains
🌅	sunrise
🌆	cityscape_at_dusk
🌇	sunset
🌈	rainbow
🌉	bridge_at_night
🌊	water_wave
🌋	volcano
🌌	milky_way
🌍	globe_showing_europe_africa
🌎	globe_showing_americas
🌏	globe_showing_asia_australia
🌐	globe_with_meridians
🌑	new_moon
🌒	waxing_crescent_moon
🌓	first_quarter_moon
🌔	waxing_gibbous_moon
🌕	full_moon
🌖	waning_gibbous_moon
🌗	last_quarter_moon
🌘	waning_crescent_moon
🌙	crescent_moon
🌚	new_moon_face
🌛	first_quarter_moon_face
🌜	last_quarter_moon_face
🌝	full_moon_face
🌞	sun_with_face
🌟	glowing_star
🌠	shooting_star
🌡	thermometer
🌤	sun_behind_small_cloud
🌥	sun_behind_large_cloud
🌦	sun_behind_rain_cloud
🌧	cloud_with_rain
🌨	cloud_with_snow
🌩	cloud_with_lightning
🌪	tornado
🌫	fog
🌬	wind_face
🌭	hot_dog
🌮	taco
🌯	burrito
🌰	chestnut
🌱	seedling
🌲	evergreen_tree
🌳	deciduous_tree
🌴	palm_tree
🌵	cactus
🌶	hot_pepper
🌷	tulip
🌸	cherry_blossom
🌹	rose
🌺	hibiscus
🌻	sunflower
🌼	blossom
🌽	ear_of_corn
🌾	sheaf_of_rice
🌿	herb
🍀	four_leaf_clover
🍁	maple_leaf
🍂	fallen_leaf
🍃	leaf_fluttering_in_wind
🍄	mushroom
🍅	tomato
🍆	eggplant
🍇	grapes
🍈	melon
🍉	watermelon
🍊	tangerine
🍋	lemon
🍌	banana
🍍	pineapple
🍎	red_apple
🍏	green_apple
🍐	pear
🍑	peach
🍒	cherries
🍓	strawberry
🍔	hamburger
🍕	pizza
🍖	meat_on_bone
🍗	poultry_leg
🍘	rice_cracker
🍙	rice_ball
🍚	cooked_rice
🍛	curry_rice
🍜	steaming_bowl
🍝	spaghetti
🍞	bread
🍟	french_fries
🍠	roasted_sweet_potato
🍡	dango
🍢	oden
🍣	sushi
🍤	fried_shrimp
🍥	fish_cake_with_swirl
🍦	soft_ice_cream
🍧	shaved_ice
🍨	ice_cream
🍩	doughnut
🍪	cookie
🍫	chocolate_bar
🍬	candy
🍭	lollipop
🍮	custard
🍯	honey_pot
🍰	shortcake
🍱	bento_box
🍲	pot_of_food
🍳	cooking
🍴	fork_and_knife
🍵	teacup_without_handle
🍶	sake
🍷	wine_glass
🍸	cocktail_glass
🍹	tropical_drink
🍺	beer_mug
🍻	clinking_beer_mugs
🍼	baby_bottle
🍽	fork_and_knife_with_plate
🍾	bottle_with_popping_cork
🍿	popcorn
🎀	ribbon
🎁	wrapped_gift
🎂	birthday_cake
🎃	jack_o_lantern
🎄	christmas_tree
🎅	santa_claus
🎆	fireworks
🎇	sparkler
🎈	balloon
🎉	party_popper
🎊	confetti_ball
🎋	tanabata_tree
🎌	crossed_flags
🎍	pine_decoration
🎎	japanese_dolls
🎏	carp_streamer
🎐	wind_chime
🎑	moon_viewing_ceremony
🎒	backpack
🎓	graduation_cap
🎖	military_medal
🎗	reminder_ribbon
🎙	studio_microphone
🎚	level_slider
🎛	control_knobs
🎞	film_frames
🎟	admission_tickets
🎠	carousel_horse
🎡	ferris_wheel
🎢	roller_coaster
🎣	fishing_pole
🎤	microphone
🎥	movie_camera
🎦	cinema
🎧	headphone
🎨	artist_palette
🎩	top_hat
🎪	circus_tent
🎫	ticket
🎬	clapper_board
🎭	performing_arts
🎮	video_game
🎯	bullseye
🎰	slot_machine
🎱	pool_8_ball
🎲	game_die
🎳	bowling
🎴	flower_playing_cards
🎵	musical_note
🎶	musical_notes
🎷	saxophone
🎸	guitar
🎹	musical_keyboard
🎺	trumpet
🎻	violin
🎼	musical_score
🎽	running_shirt
🎾	tennis
🎿	skis
🏀	basketball
🏁	chequered_flag
🏂	snowboarder
🏃	person_running
🏄	person_surfing
🏅	sports_medal
🏆	trophy
🏇	horse_racing
🏈	american_football
🏉	rugby_football
🏊	person_swimming
🏋	person_lifting_weights
🏌	person_golfing
🏍	motorcycle
🏎	racing_car
🏏	cricket_game
🏐	volleyball
🏑	field_hockey
🏒	ice_hockey
🏓	ping_pong
🏔	snow_capped_mountain
🏕	camping
🏖	beach_with_umbrella
🏗	building_construction
🏘	houses
🏙	cityscape
🏚	derelict_house
🏛	classical_building
🏜	desert
🏝	desert_island
🏞	national_park
🏟	stadium
🏠	house
🏡	house_with_garden
🏢	office_building
🏣	japanese_post_office
🏤	post_office
🏥	hospital
🏦	bank
🏧	atm_sign
🏨	hotel
🏩	love_hotel
🏪	convenience_store
🏫	school
🏬	department_store
🏭	factory
🏮	red_paper_lantern
🏯	japanese_castle
🏰	castle
🏳	white_flag
🏴	black_flag
🏵	rosette
🏷	label
🏸	badminton
🏹	bow_and_arrow
🏺	amphora
🏻	light_skin_tone
🏼	medium_light_skin_tone
🏽	medium_skin_tone
🏾	medium_dark_skin_tone
🏿	dark_skin_tone
🐀	rat
🐁	mouse
🐂	ox
🐃	water_buffalo
🐄	cow
🐅	tiger
🐆	leopard
🐇	rabbit
🐈	cat
🐉	dragon
🐊	crocodile
🐋	whale
🐌	snail
🐍	snake
🐎	horse
🐏	ram
🐐	goat
🐑	ewe
🐒	monkey
🐓	rooster
🐔	chicken
🐕	dog
🐖	pig
🐗	boar
🐘	elephant
🐙	octopus
🐚	spiral_shell
🐛	bug
🐜	ant
🐝	honeybee
🐞	lady_beetle
🐟	fish
🐠	tropical_fish
🐡	blowfish
🐢	turtle
🐣	hatching_chick
🐤	baby_chick
🐥	front_facing_baby_chick
🐦	bird
🐧	penguin
🐨	koala
🐩	poodle
🐪	camel
🐫	two_hump_camel
🐬	dolphin
🐭	mouse_face
🐮	cow_face
🐯	tiger_face
🐰	rabbit_face
🐱	cat_face
🐲	dragon_face
🐳	spouting_whale
🐴	horse_face
🐵	monkey_face
🐶	dog_face
🐷	pig_face
🐸	frog
🐹	hamster
🐺	wolf
🐻	bear
🐼	panda
🐽	pig_nose
🐾	paw_prints
🐿	chipmunk
👀	eyes
👁	eye
👂	ear
👃	nose
👄	mouth
👅	tongue
👆	backhand_index_pointing_up
👇	backhand_index_pointing_down
👈	backhand_index_pointing_left
👉	backhand_index_pointing_right
👊	oncoming_fist
👋	waving_hand
👌	ok_hand
👍	thumbs_up
👎	thumbs_down
👏	clapping_hands
👐	open_hands
👑	crown
👒	woman_s_hat
👓	glasses
👔	necktie
👕	t_shirt
👖	jeans
👗	dress
👘	kimono
👙	bikini
👚	woman_s_clothes
👛	purse
👜	handbag
👝	clutch_bag
👞	man_s_shoe
👟	running_shoe
👠	high_heeled_shoe
👡	woman_s_sandal
👢	woman_s_boot
👣	footprints
👤	bust_in_silhouette
👥	busts_in_silhouette
👦	boy
👧	girl
👨	man
👩	woman
👪	family
👫	woman_and_man_holding_hands
👬	men_holding_hands
👭	women_holding_hands
👮	police_officer
👯	people_with_bunny_ears
👰	person_with_veil
👱	person_blond_hair
👲	person_with_skullcap
👳	person_wearing_turban
👴	old_man
👵	old_woman
👶	baby
👷	construction_worker
👸	princess
👹	ogre
👺	goblin
👻	ghost
👼	baby_angel
👽	alien
👾	alien_monster
👿	angry_face_with_horns
💀	skull
💁	person_tipping_hand
💂	guard
💃	woman_dancing
💄	lipstick
💅	nail_polish
💆	person_getting_massage
💇	person_getting_haircut
💈	barber_pole
💉	syringe
💊	pill
💋	kiss_mark
💌	love_letter
💍	ring
💎	gem_stone
💏	kiss
💐	bouquet
💑	couple_with_heart
💒	wedding
💓	beating_heart
💔	broken_heart
💕	two_hearts
💖	sparkling_heart
💗	growing_heart
💘	heart_with_arrow
💙	blue_heart
💚	green_heart
💛	yellow_heart
💜	purple_heart
💝	heart_with_ribbon
💞	revolving_hearts
💟	heart_decoration
💠	diamond_with_a_dot
💡	light_bulb
💢	anger_symbol
💣	bomb
💤	zzz
💥	collision
💦	sweat_droplets
💧	droplet
💨	dashing_away
💩	pile_of_poo
💪	flexed_biceps
💫	dizzy
💬	speech_balloon
💭	thought_balloon
💮	white_flower
💯	hundred_points
💰	money_bag
💱	currency_exchange
💲	heavy_dollar_sign
💳	credit_card
💴	yen_banknote
💵	dollar_banknote
💶	euro_banknote
💷	pound_banknote
💸	money_with_wings
💹	chart_increasing_with_yen
💺	seat
💻	laptop
💼	briefcase
💽	computer_disk
💾	floppy_disk
💿	optical_disk
📀	dvd
📁	file_folder
📂	open_file_folder
📃	page_with_curl
📄	page_facing_up
📅	calendar
📆	tear_off_calendar
📇	card_index
📈	chart_increasing
📉	chart_decreasing
📊	bar_chart
📋	clipboard
📌	pushpin
📍	round_pushpin
📎	paperclip
📏	straight_ruler
📐	triangular_ruler
📑	bookmark_tabs
📒	ledger
📓	notebook
📔	notebook_with_decorative_cover
📕	closed_book
📖	open_book
📗	green_book
📘	blue_book
📙	orange_book
📚	books
📛	name_badge
📜	scroll
📝	memo
📞	telephone_receiver
📟	pager
📠	fax_machine
📡	satellite_antenna
📢	loudspeaker
📣	megaphone
📤	outbox_tray
📥	inbox_tray
📦	package
📧	e_mail
📨	incoming_envelope
📩	envelope_with_arrow
📪	closed_mailbox_with_lowered_flag
📫	closed_mailbox_with_raised_flag
📬	open_mailbox_with_raised_flag
📭	open_mailbox_with_lowered_flag
📮	postbox
📯	postal_horn
📰	newspaper
📱	mobile_phone
📲	mobile_phone_with_arrow
📳	vibration_mode
📴	mobile_phone_off
📵	no_mobile_phones
📶	antenna_bars
📷	camera
📸	camera_with_flash
📹	video_camera
📺	television
📻	radio
📼	videocassette
📽	film_projector
📿	prayer_beads
🔀	shuffle_tracks_button
🔁	repeat_button
🔂	repeat_single_button
🔃	clockwise_vertical_arrows
🔄	counterclockwise_arrows_button
🔅	dim_button
🔆	bright_button
🔇	muted_speaker
🔈	speaker_low_volume
🔉	speaker_medium_volume
🔊	speaker_high_volume
🔋	battery
🔌	electric_plug
🔍	magnifying_glass_tilted_left
🔎	magnifying_glass_tilted_right
🔏	locked_with_pen
🔐	locked_with_key
🔑	key
🔒	locked
🔓	unlocked
🔔	bell
🔕	bell_with_slash
🔖	bookmark
🔗	link
🔘	radio_button
🔙	back_arrow
🔚	end_arrow
🔛	on_arrow
🔜	soon_arrow
🔝	top_arrow
🔞	no_one_under_eighteen
🔟	keycap_10
🔠	input_latin_uppercase
🔡	input_latin_lowercase
🔢	input_numbers
🔣	input_symbols
🔤	input_latin_letters
🔥	fire
🔦	flashlight
🔧	wrench
🔨	hammer
🔩	nut_and_bolt
🔪	kitchen_knife
🔫	water_pistol
🔬	microscope
🔭	telescope
🔮	crystal_ball
🔯	dotted_six_pointed_star
🔰	japanese_symbol_for_beginner
🔱	trident_emblem
🔲	black_square_button
🔳	white_square_button
🔴	red_circle
🔵	blue_circle
🔶	large_orange_diamond
🔷	large_blue_diamond
🔸	small_orange_diamond
🔹	small_blue_diamond
🔺	red_triangle_pointed_up
🔻	red_triangle_pointed_down
🔼	upwards_button
🔽	downwards_button
🕉	om
🕊	dove
🕋	kaaba
🕌	mosque
🕍	synagogue
🕎	menorah
🕐	one_o_clock
🕑	two_o_clock
🕒	three_o_clock
🕓	four_o_clock
🕔	five_o_clock
🕕	six_o_clock
🕖	seven_o_clock
🕗	eight_o_clock
🕘	nine_o_clock
🕙	ten_o_clock
🕚	eleven_o_clock
🕛	twelve_o_clock
🕜	one_thirty
🕝	two_thirty
🕞	three_thirty
🕟	four_thirty
🕠	five_thirty
🕡	six_thirty
🕢	seven_thirty
🕣	eight_thirty
🕤	nine_thirty
🕥	ten_thirty
🕦	eleven_thirty
🕧	twelve_thirty
🕯	candle
🕰	mantelpiece_clock
🕳	hole
🕴	person_in_suit_levitating
🕵	detective
🕶	sunglasses
🕷	spider
🕸	spider_web
🕹	joystick
🕺	man_dancing
🖇	linked_paperclips
🖊	pen
🖋	fountain_pen
🖌	paintbrush
🖍	crayon
🖐	hand_with_fingers_splayed
🖕	middle_finger
🖖	vulcan_salute
🖤	black_heart
🖥	desktop_computer
🖨	printer
🖱	computer_mouse
🖲	trackball
🖼	framed_picture
🗂	card_index_dividers
🗃	card_file_box
🗄	file_cabinet
🗑	wastebasket
🗒	spiral_notepad
🗓	spiral_calendar
🗜	clamp
🗝	old_key
🗞	rolled_up_newspaper
🗡	dagger
🗣	speaking_head
🗨	left_speech_bubble
🗯	right_anger_bubble
🗳	ballot_box_with_ballot
🗺	world_map
🗻	mount_fuji
🗼	tokyo_tower
🗽	statue_of_liberty
🗾	map_of_japan
🗿	moai
😀	grinning_face
😁	beaming_face_with_smiling_eyes
😂	face_with_tears_of_joy
😃	grinning_face_with_big_eyes
😄	grinning_face_with_smiling_eyes
😅	grinning_face_with_sweat
😆	grinning_squinting_face
😇	smiling_face_with_halo
😈	smiling_face_with_horns
😉	winking_face
😊	smiling_face_with_smiling_eyes
😋	face_savoring_food
😌	relieved_face
😍	smiling_face_with_heart_eyes
😎	smiling_face_with_sunglasses
😏	smirking_face
😐	neutral_face
😑	expressionless_face
😒	unamused_face
😓	downcast_face_with_sweat
😔	pensive_face
😕	confused_face
😖	confounded_face
😗	kissing_face
😘	face_blowing_a_kiss
😙	kissing_face_with_smiling_eyes
😚	kissing_face_with_closed_eyes
😛	face_with_tongue
😜	winking_face_with_tongue
😝	squinting_face_with_tongue
😞	disappointed_face
😟	worried_face
😠	angry_face
😡	enraged_face
😢	crying_face
😣	persevering_face
😤	face_with_steam_from_nose
😥	sad_but_relieved_face
😦	frowning_face_with_open_mouth
😧	anguished_face
😨	fearful_face
😩	weary_face
😪	sleepy_face
😫	tired_face
😬	grimacing_face
😭	loudly_crying_face
😮	face_with_open_mouth
😯	hushed_face
😰	anxious_face_with_sweat
😱	face_screaming_in_fear
😲	astonished_face
😳	flushed_face
😴	sleeping_face
😵	face_with_crossed_out_eyes
😶	face_without_mouth
😷	face_with_medical_mask
😸	grinning_cat_with_smiling_eyes
😹	cat_with_tears_of_joy
😺	grinning_cat
😻	smiling_cat_with_heart_eyes
😼	cat_with_wry_smile
😽	kissing_cat
😾	pouting_cat
😿	crying_cat
🙀	weary_cat
🙁	slightly_frowning_face
🙂	slightly_smiling_face
🙃	upside_down_face
🙄	face_with_rolling_eyes
🙅	person_gesturing_no
🙆	person_gesturing_ok
🙇	person_bowing
🙈	see_no_evil_monkey
🙉	hear_no_evil_monkey
🙊	speak_no_evil_monkey
🙋	person_raising_hand
🙌	raising_hands
🙍	person_frowning
🙎	person_pouting
🙏	folded_hands
🚀	rocket
🚁	helicopter
🚂	locomotive
🚃	railway_car
🚄	high_speed_train
🚅	bullet_train
🚆	train
🚇	metro
🚈	light_rail
🚉	station
🚊	tram
🚋	tram_car
🚌	bus
🚍	oncoming_bus
🚎	trolleybus
🚏	bus_stop
🚐	minibus
🚑	ambulance
🚒	fire_engine
🚓	police_car
🚔	oncoming_police_car
🚕	taxi
🚖	oncoming_taxi
🚗	automobile
🚘	oncoming_automobile
🚙	sport_utility_vehicle
🚚	delivery_truck
🚛	articulated_lorry
🚜	tractor
🚝	monorail
🚞	mountain_railway
🚟	suspension_railway
🚠	mountain_cableway
🚡	aerial_tramway
🚢	ship
🚣	person_rowing_boat
🚤	speedboat
🚥	horizontal_traffic_light
🚦	vertical_traffic_light
🚧	construction
🚨	police_car_light
🚩	triangular_flag
🚪	door
🚫	prohibited
🚬	cigarette
🚭	no_smoking
🚮	litter_in_bin_sign
🚯	no_littering
🚰	potable_water
🚱	non_potable_water
🚲	bicycle
🚳	no_bicycles
🚴	person_biking
🚵	person_mountain_biking
🚶	person_walking
🚷	no_pedestrians
🚸	children_crossing
🚹	men_s_room
🚺	women_s_room
🚻	restroom
🚼	baby_symbol
🚽	toilet
🚾	water_closet
🚿	shower
🛀	person_taking_bath
🛁	bathtub
🛂	passport_control
🛃	customs
🛄	baggage_claim
🛅	left_luggage
🛋	couch_and_lamp
🛌	person_in_bed
🛍	shopping_bags
🛎	bellhop_bell
🛏	bed
🛐	place_of_worship
🛑	stop_sign
🛒	shopping_cart
🛕	hindu_temple
🛖	hut
🛗	elevator
🛘	landslide
🛙	lighthouse
🛜	wireless
🛝	playground_slide
🛞	wheel
🛟	ring_buoy
🛠	hammer_and_wrench
🛡	shield
🛢	oil_drum
🛣	motorway
🛤	railway_track
🛥	motor_boat
🛩	small_airplane
🛫	airplane_departure
🛬	airplane_arrival
🛰	satellite
🛳	passenger_ship
🛴	kick_scooter
🛵	motor_scooter
🛶	canoe
🛷	sled
🛸	flying_saucer
🛹	skateboard
🛺	auto_rickshaw
🛻	pickup_truck
🛼	roller_skate
🟠	orange_circle
🟡	yellow_circle
🟢	green_circle
🟣	purple_circle
🟤	brown_circle
🟥	red_square
🟦	blue_square
🟧	orange_square
🟨	yellow_square
🟩	green_square
🟪	purple_square
🟫	brown_square
🟰	heavy_equals_sign
🤌	pinched_fingers
🤍	white_heart
🤎	brown_heart
🤏	pinching_hand
🤐	zipper_mouth_face
🤑	money_mouth_face
🤒	face_with_thermometer
🤓	nerd_face
🤔	thinking_face
🤕	face_with_head_bandage
🤖	robot
🤗	smiling_face_with_open_hands
🤘	sign_of_the_horns
🤙	call_me_hand
🤚	raised_back_of_hand
🤛	left_facing_fist
🤜	right_facing_fist
🤝	handshake
🤞	crossed_fingers
🤟	love_you_gesture
🤠	cowboy_hat_face
🤡	clown_face
🤢	nauseated_face
🤣	rolling_on_the_floor_laughing
🤤	drooling_face
🤥	lying_face
🤦	person_facepalming
🤧	sneezing_face
🤨	face_with_raised_eyebrow
🤩	star_struck
🤪	zany_face
🤫	shushing_face
🤬	face_with_symbols_on_mouth
🤭	face_with_hand_over_mouth
🤮	face_vomiting
🤯	exploding_head
🤰	pregnant_woman
🤱	breast_feeding
🤲	palms_up_together
🤳	selfie
🤴	prince
🤵	person_in_tuxedo
🤶	mrs_claus
🤷	person_shrugging
🤸	person_cartwheeling
🤹	person_juggling
🤺	person_fencing
🤼	people_wrestling
🤽	person_playing_water_polo
🤾	person_playing_handball
🤿	diving_mask
🥀	wilted_flower
🥁	drum
🥂	clinking_glasses
🥃	tumbler_glass
🥄	spoon
🥅	goal_net
🥇	1st_place_medal
🥈	2nd_place_medal
🥉	3rd_place_medal
🥊	boxing_glove
🥋	martial_arts_uniform
🥌	curling_stone
🥍	lacrosse
🥎	softball
🥏	flying_disc
🥐	croissant
🥑	avocado
🥒	cucumber
🥓	bacon
🥔	potato
🥕	carrot
🥖	baguette_bread
🥗	green_salad
🥘	shallow_pan_of_food
🥙	stuffed_flatbread
🥚	egg
🥛	glass_of_milk
🥜	peanuts
🥝	kiwi_fruit
🥞	pancakes
🥟	dumpling
🥠	fortune_cookie
🥡	takeout_box
🥢	chopsticks
🥣	bowl_with_spoon
🥤	cup_with_straw
🥥	coconut
🥦	broccoli
🥧	pie
🥨	pretzel
🥩	cut_of_meat
🥪	sandwich
🥫	canned_food
🥬	leafy_green
🥭	mango
🥮	moon_cake
🥯	bagel
🥰	smiling_face_with_hearts
🥱	yawning_face
🥲	smiling_face_with_tear
🥳	partying_face
🥴	woozy_face
🥵	hot_face
🥶	cold_face
🥷	ninja
🥸	disguised_face
🥹	face_holding_back_tears
🥺	pleading_face
🥻	sari
🥼	lab_coat
🥽	goggles
🥾	hiking_boot
🥿	flat_shoe
🦀	crab
🦁	lion
🦂	scorpion
🦃	turkey
🦄	unicorn
🦅	eagle
🦆	duck
🦇	bat
🦈	shark
🦉	owl
🦊	fox
🦋	butterfly
🦌	deer
🦍	gorilla
🦎	lizard
🦏	rhinoceros
🦐	shrimp
🦑	squid
🦒	giraffe
🦓	zebra
🦔	hedgehog
🦕	sauropod
🦖	t_rex
🦗	cricket
🦘	kangaroo
🦙	llama
🦚	peacock
🦛	hippopotamus
🦜	parrot
🦝	raccoon
🦞	lobster
🦟	mosquito
🦠	microbe
🦡	badger
🦢	swan
🦣	mammoth
🦤	dodo
🦥	sloth
🦦	otter
🦧	orangutan
🦨	skunk
🦩	flamingo
🦪	oyster
🦫	beaver
🦬	bison
🦭	seal
🦮	guide_dog
🦯	white_cane
🦰	red_hair
🦱	curly_hair
🦲	bald
🦳	white_hair
🦴	bone
🦵	leg
🦶	foot
🦷	tooth
🦸	superhero
🦹	supervillain
🦺	safety_vest
🦻	ear_with_hearing_aid
🦼	motorized_wheelchair
🦽	manual_wheelchair
🦾	mechanical_arm
🦿	mechanical_leg
🧀	cheese_wedge
🧁	cupcake
🧂	salt
🧃	beverage_box
🧄	garlic
🧅	onion
🧆	falafel
🧇	waffle
🧈	butter
🧉	mate
🧊	ice
🧋	bubble_tea
🧌	troll
🧍	person_standing
🧎	person_kneeling
🧏	deaf_person
🧐	face_with_monocle
🧑	person
🧒	child
🧓	older_person
🧔	person_beard
🧕	woman_with_headscarf
🧖	person_in_steamy_room
🧗	person_climbing
🧘	person_in_lotus_position
🧙	mage
🧚	fairy
🧛	vampire
🧜	merperson
🧝	elf
🧞	genie
🧟	zombie
🧠	brain
🧡	orange_heart
🧢	billed_cap
🧣	scarf
🧤	gloves
🧥	coat
🧦	socks
🧧	red_envelope
🧨	firecracker
🧩	puzzle_piece
🧪	test_tube
🧫	petri_dish
🧬	dna
🧭	compass
🧮	abacus
🧯	fire_extinguisher
🧰	toolbox
🧱	brick
🧲	magnet
🧳	luggage
🧴	lotion_bottle
🧵	thread
🧶	yarn
🧷	safety_pin
🧸	teddy_bear
🧹	broom
🧺	basket
🧻	roll_of_paper
🧼	soap
🧽	sponge
🧾	receipt
🧿	nazar_amulet
🩰	ballet_shoes
🩱	one_piece_swimsuit
🩲	briefs
🩳	shorts
🩴	thong_sandal
🩵	light_blue_heart
🩶	grey_heart
🩷	pink_heart
🩸	drop_of_blood
🩹	adhesive_bandage
🩺	stethoscope
🩻	x_ray
🩼	crutch
🪀	yo_yo
🪁	kite
🪂	parachute
🪃	boomerang
🪄	magic_wand
🪅	pi_ata
🪆	nesting_dolls
🪇	maracas
🪈	flute
🪉	harp
🪊	trombone
🪋	meteor
🪌	eraser
🪍	net_with_handle
🪎	treasure_chest
🪏	shovel
🪐	ringed_planet
🪑	chair
🪒	razor
🪓	axe
🪔	diya_lamp
🪕	banjo
🪖	military_helmet
🪗	accordion
🪘	long_drum
🪙	coin
🪚	carpentry_saw
🪛	screwdriver
🪜	ladder
🪝	hook
🪞	mirror
🪟	window
🪠	plunger
🪡	sewing_needle
🪢	knot
🪣	bucket
🪤	mouse_trap
🪥	toothbrush
🪦	headstone
🪧	placard
🪨	rock
🪩	mirror_ball
🪪	identification_card
🪫	low_battery
🪬	hamsa
🪭	folding_hand_fan
🪮	hair_pick
🪯	khanda
🪰	fly
🪱	worm
🪲	beetle
🪳	cockroach
🪴	potted_plant
🪵	wood
🪶	feather
🪷	lotus
🪸	coral
🪹	empty_nest
🪺	nest_with_eggs
🪻	hyacinth
🪼	jellyfish
🪽	wing
🪾	leafless_tree
🪿	goose
🫀	anatomical_heart
🫁	lungs
🫂	people_hugging
🫃	pregnant_man
🫄	pregnant_person
🫅	person_with_crown
🫆	fingerprint
🫈	hairy_creature
🫌	monarch_butterfly
🫍	orca
🫎	moose
🫏	donkey
🫐	blueberries
🫑	bell_pepper
🫒	olive
🫓	flatbread
🫔	tamale
🫕	fondue
🫖	teapot
🫗	pouring_liquid
🫘	beans
🫙	jar
🫚	ginger_root
🫛	pea_pod
🫜	root_vegetable
🫝	pickle
🫟	splatter
🫠	melting_face
🫡	saluting_face
🫢	face_with_open_eyes_and_hand_over_mouth
🫣	face_with_peeking_eye
🫤	face_with_diagonal_mouth
🫥	dotted_line_face
🫦	biting_lip
🫧	bubbles
🫨	shaking_face
🫩	face_with_bags_under_eyes
🫪	distorted_face
🫫	cracking_face
🫯	fight_cloud
🫰	hand_with_index_finger_and_thumb_crossed
🫱	rightwards_hand
🫲	leftwards_hand
🫳	palm_down_hand
🫴	palm_up_hand
🫵	index_pointing_at_the_viewer
🫶	heart_hands
🫷	leftwards_pushing_hand
🫸	rightwards_pushing_hand
🫹	leftwards_thumb_sign
🫺	rightwards_thumb_sign
)modkit";

inline constexpr std::string_view k_lemma_exceptions = R"modkit(# word<TAB>lemma; irregular forms and words the suffix rules get wrong
am	be
are	be
is	be
was	be
were	be
been	be
being	be
has	have
had	have
having	have
does	do
did	do
done	do
doing	do
goes	go
went	go
gone	go
going	go
said	say
says	say
made	make
making	make
makes	make
took	take
taken	take
taking	take
wrote	write
written	write
writing	write
writes	write
gave	give
given	give
got	get
gotten	get
knew	know
known	know
thought	think
saw	see
seen	see
came	come
coming	come
ran	run
told	tell
felt	feel
left	leave
kept	keep
lost	lose
losing	lose
paid	pay
bought	buy
brought	bring
caught	catch
taught	teach
found	find
heard	hear
meant	mean
sent	send
spent	spend
stood	stand
understood	understand
sat	sit
won	win
ate	eat
eaten	eat
fell	fall
fallen	fall
drove	drive
driven	drive
spoke	speak
spoken	speak
broke	break
broken	break
chose	choose
chosen	choose
became	become
began	begin
begun	begin
forgot	forget
forgotten	forget
hated	hate
hating	hate
hates	hate
used	use
using	use
uses	use
loved	love
loving	love
loves	love
liked	like
liking	like
likes	like
cared	care
caring	care
cares	care
hoped	hope
hoping	hope
closed	close
closing	close
typed	type
typing	type
lived	live
living	live
moved	move
moving	move
died	die
dying	die
lied	lie
lying	lie
tried	try
trying	try
saved	save
saving	save
changed	change
changing	change
raised	raise
raising	raise
believed	believe
believing	believe
judged	judge
judging	judge
argued	argue
arguing	argue
blamed	blame
blaming	blame
ignored	ignore
ignoring	ignore
named	name
voted	vote
voting	vote
visiting	visit
visited	visit
children	child
men	man
women	woman
people	person
feet	foot
teeth	tooth
mice	mouse
lives	life
wives	wife
knives	knife
leaves	leaf
wolves	wolf
halves	half
selves	self
better	good
best	good
worse	bad
worst	bad
news	news
series	series
species	species
nothing	nothing
something	something
everything	everything
anything	anything
morning	morning
evening	evening
during	during
string	string
spring	spring
speed	speed
indeed	indeed
hundred	hundred
naked	naked
wicked	wicked
always	always
perhaps	perhaps
movies	movie
cookies	cookie
eating	eat
)modkit";

inline constexpr std::string_view k_lemma_rules = R"modkit(# suffix<TAB>replacement<TAB>min_stem
# A replacement of "-" means the suffix is removed.
# Applied in order; the first rule whose output is already a lemma wins.
# A rule whose replacement equals its suffix protects that ending.
# Noun rules precede verb rules.
ss	ss	0
us	us	0
is	is	0
sses	ss	1
ches	ch	1
shes	sh	1
xes	x	1
zzes	zz	1
ies	y	2
s	-	3
ied	y	2
bbing	b	1
dding	d	1
gging	g	1
mming	m	1
nning	n	1
pping	p	1
tting	t	1
bbed	b	1
dded	d	1
gged	g	1
mmed	m	1
nned	n	1
pped	p	1
tted	t	1
ating	ate	1
ated	ate	1
iting	ite	1
iking	ike	1
iked	ike	1
aking	ake	1
oving	ove	1
oved	ove	1
iving	ive	1
ived	ive	1
ying	y	1
ing	-	3
ed	-	3
)modkit";

inline constexpr std::string_view k_vocab = R"modkit([PAD]
[UNK]
[CLS]
[SEP]
[MASK]
0
1
2
3
4
5
6
7
8
9
a
b
c
d
e
f
g
h
i
j
k
l
m
n
o
p
q
r
s
t
u
v
w
x
y
z
A
B
C
D
E
F
G
H
I
J
K
L
M
N
O
P
Q
R
S
T
U
V
W
X
Y
Z
!
"
#
$
%
&
'
(
)
*
+
,
-
.
/
:
;
<
=
>
?
@
[
\
]
^
_
`
{
|
}
~
##0
##1
##2
##3
##4
##5
##6
##7
##8
##9
##a
##b
##c
##d
##e
##f
##g
##h
##i
##j
##k
##l
##m
##n
##o
##p
##q
##r
##s
##t
##u
##v
##w
##x
##y
##z
##A
##B
##C
##D
##E
##F
##G
##H
##I
##J
##K
##L
##M
##N
##O
##P
##Q
##R
##S
##T
##U
##V
##W
##X
##Y
##Z
##!
##"
###
##$
##%
##&
##'
##(
##)
##*
##+
##,
##-
##.
##/
##:
##;
##<
##=
##>
##?
##@
##[
##\
##]
##^
##_
##`
##{
##|
##}
##~
##es
##ed
##ing
##er
##ers
##est
##ly
##ie
##ies
##ness
##ment
##ments
##tion
##tions
##sion
##al
##ial
##ful
##less
##able
##ible
##ous
##ive
##ity
##ism
##ist
##ists
##ize
##ise
##ish
##ic
##ical
##an
##ian
##en
##ened
##ening
##ance
##ence
##ant
##ent
##ry
##ary
##ory
##le
##les
##el
##et
##ette
##ion
##ions
##age
##ages
##in
##on
##un
##ut
##ot
##at
##it
##im
##ip
##op
##ap
##up
##ub
##ag
##ig
##og
##ug
##ad
##id
##od
##ud
##ab
##ob
##am
##um
##em
##mer
##mers
##ner
##per
##ter
##ters
##der
##ber
##ger
##ker
##ler
##ver
##ster
##ck
##cks
##ch
##sh
##th
##ght
##nt
##nd
##st
##ng
##nk
##mp
##mb
##ll
##ss
##tt
##pp
##rr
##ff
##dd
##nn
the
be
to
of
and
in
that
have
it
for
not
on
with
he
as
you
do
at
this
but
his
by
from
they
we
say
her
she
or
an
will
my
one
all
would
there
their
what
so
up
out
if
about
who
get
which
go
me
when
make
can
like
time
no
just
him
know
take
people
into
year
your
good
some
could
them
see
other
than
then
now
look
only
come
its
over
think
also
back
after
use
two
how
our
work
first
well
way
even
new
want
because
any
these
give
day
most
us
is
are
was
were
been
has
had
did
does
done
said
got
made
went
gone
came
going
being
very
really
actually
literally
always
never
ever
still
again
already
yes
yeah
yea
yep
nope
nah
ok
okay
lol
lmao
lmfao
omg
wtf
idk
tbh
smh
fr
bro
bruh
sis
dude
guy
guys
girl
girls
boy
boys
man
men
woman
women
kid
kids
mom
dad
mother
father
brother
sister
family
friend
friends
baby
babies
love
hate
hated
loved
liked
hating
loving
dumb
stupid
idiot
idiots
ugly
fat
loser
losers
trash
clown
clowns
joke
funny
cute
pretty
nice
sweet
kind
cool
awesome
amazing
great
best
better
bad
worse
worst
terrible
horrible
disgusting
gross
weird
crazy
insane
sad
happy
mad
angry
upset
sorry
thanks
thank
please
welcome
shut
stop
stay
leave
let
keep
put
set
try
tried
trying
help
need
needs
talk
talking
talked
saying
says
tell
telling
told
ask
asking
read
reading
write
writing
wrote
learn
learning
school
teacher
class
skill
skills
critical
thinking
thought
thinks
brain
brains
smart
graph
graphs
phrase
phrases
message
messages
comment
comments
post
posts
video
videos
song
songs
music
dance
dancing
watch
watching
watched
someone
somebody
anyone
anybody
everyone
everybody
nobody
nothing
something
everything
anything
where
here
why
whom
whose
since
until
while
before
during
above
below
under
further
once
more
much
many
few
less
least
enough
old
young
life
live
lives
living
dead
die
died
dying
kill
killed
girlfriend
boyfriend
wife
husband
child
children
parent
parents
real
fake
true
false
right
wrong
fact
facts
opinion
opinions
world
country
countries
city
home
house
room
car
phone
money
job
black
white
red
blue
green
yellow
pink
purple
orange
brown
face
faces
heart
hearts
eye
eyes
hand
hands
head
body
mouth
joy
tears
tear
laugh
laughing
laughed
cry
crying
cried
smile
smiling
skull
fire
thumbs
clap
clapping
pray
praying
rolling
big
small
little
long
short
high
low
full
empty
whole
half
last
next
early
late
soon
today
tomorrow
yesterday
night
morning
week
weeks
month
months
years
hour
hours
minute
minutes
second
sometimes
often
usually
maybe
probably
definitely
god
jesus
church
religion
race
racist
racism
sexist
gay
straight
trans
asian
hair
skin
color
colour
language
english
boom
sim
vibe
vibes
mid
lit
tea
queen
king
kings
queens
block
blocked
report
reported
ban
banned
delete
deleted
account
follow
following
followers
likes
view
views
share
shared
game
games
play
playing
played
player
team
win
won
lose
lost
fight
fighting
fought
hit
hurt
pain
sick
tired
sleep
sleeping
eat
eating
food
drink
drinking
water
coffee
pizza
knows
knew
known
understand
understood
mean
means
meant
feel
feels
feeling
felt
seem
seems
seemed
looks
looked
find
found
gives
given
gave
takes
taken
took
comes
coming
gets
getting
makes
making
goes
wants
wanted
wanting
call
called
calling
name
names
named
show
showed
shown
shows
point
points
person
persons
human
humans
animal
animals
dog
dogs
cat
cats
pointless
useless
worthless
hopeless
brainless
clueless
childish
responses
response
respond
typing
type
types
typed
correctly
correct
wrongly
simply
simple
hard
easy
ur
im
gonna
gon
cant
cause
wanna
gotta
lemme
gimme
dont
wont
isn
aren
wasn
weren
don
doesn
didn
couldn
shouldn
wouldn
ain
kinda
sorta
outta
)modkit";

}  // namespace modkit::bundled
