#pragma once
// Generated by scripts/make_verb_lexicon.py -- edit the script, not this file.
// Embedded copies of data/verb_lexicon.tsv and data/irregular_verbs.tsv.
#include <string_view>

namespace procmatch::detail {

inline constexpr std::string_view verb_lexicon_tsv =
    R"__tsv__(accept	accept
accepted	accept
accepting	accept
accepts	accept
accessed	access
accessing	access
accommodate	accommodate
accommodated	accommodate
accommodates	accommodate
accommodating	accommodate
accomplish	accomplish
accomplished	accomplish
accomplishes	accomplish
accomplishing	accomplish
accounted	account
accounting	account
achieve	achieve
achieved	achieve
achieves	achieve
achieving	achieve
acknowledge	acknowledge
acknowledged	acknowledge
acknowledges	acknowledge
acknowledging	acknowledge
acquire	acquire
acquired	acquire
acquires	acquire
acquiring	acquire
act	act
acted	act
acting	act
activate	activate
activated	activate
activates	activate
activating	activate
acts	act
adapt	adapt
adapted	adapt
adapting	adapt
adapts	adapt
add	add
added	add
adding	add
address	address
addressed	address
addresses	address
addressing	address
adds	add
adjust	adjust
adjusted	adjust
adjusting	adjust
adjusts	adjust
administer	administer
administered	administer
administering	administer
administers	administer
adopt	adopt
adopted	adopt
adopting	adopt
adopts	adopt
advance	advance
advanced	advance
advances	advance
advancing	advance
advertise	advertise
advertised	advertise
advertises	advertise
advertising	advertise
advise	advise
advised	advise
advises	advise
advising	advise
agree	agree
agreed	agree
agreeing	agree
agrees	agree
align	align
aligned	align
aligning	align
aligns	align
allocate	allocate
allocated	allocate
allocates	allocate
allocating	allocate
allow	allow
allowed	allow
allowing	allow
allows	allow
amend	amend
amended	amend
amending	amend
amends	amend
analyze	analyze
analyzed	analyze
analyzes	analyze
analyzing	analyze
announce	announce
announced	announce
announces	announce
announcing	announce
answer	answer
answered	answer
answering	answer
answers	answer
anticipate	anticipate
anticipated	anticipate
anticipates	anticipate
anticipating	anticipate
apologize	apologize
apologized	apologize
apologizes	apologize
apologizing	apologize
appeal	appeal
appealed	appeal
appealing	appeal
appeals	appeal
append	append
appended	append
appending	append
appends	append
applied	apply
applies	apply
apply	apply
applying	apply
appoint	appoint
appointed	appoint
appointing	appoint
appoints	appoint
appraise	appraise
appraised	appraise
appraises	appraise
appraising	appraise
approve	approve
approved	approve
approves	approve
approving	approve
archive	archive
archived	archive
archives	archive
archiving	archive
arrange	arrange
arranged	arrange
arranges	arrange
arranging	arrange
arrive	arrive
arrived	arrive
arrives	arrive
arriving	arrive
assemble	assemble
assembled	assemble
assembles	assemble
assembling	assemble
assess	assess
assessed	assess
assesses	assess
assessing	assess
assign	assign
assigned	assign
assigning	assign
assigns	assign
assist	assist
assisted	assist
assisting	assist
assists	assist
assume	assume
assumed	assume
assumes	assume
assuming	assume
assure	assure
assured	assure
assures	assure
assuring	assure
attach	attach
attached	attach
attaches	attach
attaching	attach
attain	attain
attained	attain
attaining	attain
attains	attain
attend	attend
attended	attend
attending	attend
attends	attend
audited	audit
auditing	audit
authenticate	authenticate
authenticated	authenticate
authenticates	authenticate
authenticating	authenticate
authorize	authorize
authorized	authorize
authorizes	authorize
authorizing	authorize
automate	automate
automated	automate
automates	automate
automating	automate
award	award
awarded	award
awarding	award
awards	award
back	back
backed	back
backing	back
backs	back
balanced	balance
balancing	balance
ban	ban
banned	ban
banning	ban
bans	ban
base	base
based	base
bases	base
basing	base
batch	batch
batched	batch
batches	batch
batching	batch
began	begin
begin	begin
beginning	begin
begins	begin
begun	begin
bill	bill
billed	bill
billing	bill
bills	bill
bind	bind
binding	bind
binds	bind
book	book
booked	book
booking	book
books	book
boost	boost
boosted	boost
boosting	boost
boosts	boost
borrow	borrow
borrowed	borrow
borrowing	borrow
borrows	borrow
bought	buy
bound	bind
brief	brief
briefed	brief
briefing	brief
briefs	brief
bring	bring
bringing	bring
brings	bring
brought	bring
browse	browse
browsed	browse
browses	browse
browsing	browse
budgeted	budget
budgeting	budget
build	build
building	build
builds	build
built	build
bundle	bundle
bundled	bundle
bundles	bundle
bundling	bundle
buy	buy
buying	buy
buys	buy
calculate	calculate
calculated	calculate
calculates	calculate
calculating	calculate
calibrate	calibrate
calibrated	calibrate
calibrates	calibrate
calibrating	calibrate
call	call
called	call
calling	call
calls	call
came	come
cancel	cancel
canceled	cancel
canceling	cancel
cancels	cancel
capture	capture
captured	capture
captures	capture
capturing	capture
carried	carry
carries	carry
carry	carry
carrying	carry
catch	catch
catches	catch
catching	catch
categorize	categorize
categorized	categorize
categorizes	categorize
categorizing	categorize
caught	catch
cause	cause
caused	cause
causes	cause
causing	cause
centralize	centralize
centralized	centralize
centralizes	centralize
centralizing	centralize
certified	certify
certifies	certify
certify	certify
certifying	certify
chained	chain
chaining	chain
change	change
changed	change
changes	change
changing	change
charged	charge
charging	charge
chart	chart
charted	chart
charting	chart
charts	chart
check	check
checked	check
checking	check
checks	check
choose	choose
chooses	choose
choosing	choose
chose	choose
chosen	choose
circulate	circulate
circulated	circulate
circulates	circulate
circulating	circulate
claimed	claim
claiming	claim
clarified	clarify
clarifies	clarify
clarify	clarify
clarifying	clarify
classified	classify
classifies	classify
classify	classify
classifying	classify
clean	clean
cleaned	clean
cleaning	clean
cleans	clean
clear	clear
cleared	clear
clearing	clear
clears	clear
close	close
closed	close
closes	close
closing	close
code	code
coded	code
codes	code
coding	code
collaborate	collaborate
collaborated	collaborate
collaborates	collaborate
collaborating	collaborate
collect	collect
collected	collect
collecting	collect
collects	collect
combine	combine
combined	combine
combines	combine
combining	combine
come	come
comes	come
coming	come
commission	commission
commissioned	commission
commissioning	commission
commissions	commission
commit	commit
commits	commit
committed	commit
committing	commit
communicate	communicate
communicated	communicate
communicates	communicate
communicating	communicate
compare	compare
compared	compare
compares	compare
comparing	compare
compensate	compensate
compensated	compensate
compensates	compensate
compensating	compensate
compile	compile
compiled	compile
compiles	compile
compiling	compile
complete	complete
completed	complete
completes	complete
completing	complete
complied	comply
complies	comply
comply	comply
complying	comply
compute	compute
computed	compute
computes	compute
computing	compute
conclude	conclude
concluded	conclude
concludes	conclude
concluding	conclude
conduct	conduct
conducted	conduct
conducting	conduct
conducts	conduct
configure	configure
configured	configure
configures	configure
configuring	configure
confirm	confirm
confirmed	confirm
confirming	confirm
confirms	confirm
connect	connect
connected	connect
connecting	connect
connects	connect
consider	consider
considered	consider
considering	consider
considers	consider
consolidate	consolidate
consolidated	consolidate
consolidates	consolidate
consolidating	consolidate
construct	construct
constructed	construct
constructing	construct
constructs	construct
consult	consult
consulted	consult
consulting	consult
consults	consult
consume	consume
consumed	consume
consumes	consume
consuming	consume
contacted	contact
contacting	contact
continue	continue
continued	continue
continues	continue
continuing	continue
contracted	contract
contracting	contract
contribute	contribute
contributed	contribute
contributes	contribute
contributing	contribute
control	control
controlled	control
controlling	control
controls	control
convert	convert
converted	convert
converting	convert
converts	convert
convey	convey
conveyed	convey
conveying	convey
conveys	convey
coordinate	coordinate
coordinated	coordinate
coordinates	coordinate
coordinating	coordinate
copied	copy
copies	copy
copy	copy
copying	copy
correct	correct
corrected	correct
correcting	correct
corrects	correct
count	count
counted	count
counting	count
counts	count
cover	cover
covered	cover
covering	cover
covers	cover
create	create
created	create
creates	create
creating	create
credited	credit
crediting	credit
cross	cross
crossed	cross
crosses	cross
crossing	cross
customize	customize
customized	customize
customizes	customize
customizing	customize
cut	cut
cuts	cut
cutting	cut
deal	deal
dealing	deal
deals	deal
dealt	deal
debit	debit
debited	debit
debiting	debit
debits	debit
decide	decide
decided	decide
decides	decide
deciding	decide
declare	declare
declared	declare
declares	declare
declaring	declare
decline	decline
declined	decline
declines	decline
declining	decline
decrease	decrease
decreased	decrease
decreases	decrease
decreasing	decrease
dedicate	dedicate
dedicated	dedicate
dedicates	dedicate
dedicating	dedicate
deduct	deduct
deducted	deduct
deducting	deduct
deducts	deduct
define	define
defined	define
defines	define
defining	define
delay	delay
delayed	delay
delaying	delay
delays	delay
delegate	delegate
delegated	delegate
delegates	delegate
delegating	delegate
delete	delete
deleted	delete
deletes	delete
deleting	delete
deliver	deliver
delivered	deliver
delivering	deliver
delivers	deliver
demanded	demand
demanding	demand
demonstrate	demonstrate
demonstrated	demonstrate
demonstrates	demonstrate
demonstrating	demonstrate
denied	deny
denies	deny
deny	deny
denying	deny
depart	depart
departed	depart
departing	depart
departs	depart
depend	depend
depended	depend
depending	depend
depends	depend
deploy	deploy
deployed	deploy
deploying	deploy
deploys	deploy
deposited	deposit
depositing	deposit
describe	describe
described	describe
describes	describe
describing	describe
design	design
designate	designate
designated	designate
designates	designate
designating	designate
designed	design
designing	design
designs	design
detect	detect
detected	detect
detecting	detect
detects	detect
determine	determine
determined	determine
determines	determine
determining	determine
develop	develop
developed	develop
developing	develop
develops	develop
digitize	digitize
digitized	digitize
digitizes	digitize
digitizing	digitize
direct	direct
directed	direct
directing	direct
directs	direct
disable	disable
disabled	disable
disables	disable
disabling	disable
discard	discard
discarded	discard
discarding	discard
discards	discard
disclose	disclose
disclosed	disclose
discloses	disclose
disclosing	disclose
discontinue	discontinue
discontinued	discontinue
discontinues	discontinue
discontinuing	discontinue
discounted	discount
discounting	discount
discuss	discuss
discussed	discuss
discusses	discuss
discussing	discuss
dispatch	dispatch
dispatched	dispatch
dispatches	dispatch
dispatching	dispatch
display	display
displayed	display
displaying	display
displays	display
dispose	dispose
disposed	dispose
disposes	dispose
disposing	dispose
distribute	distribute
distributed	distribute
distributes	distribute
distributing	distribute
divide	divide
divided	divide
divides	divide
dividing	divide
document	document
documented	document
documenting	document
documents	document
double	double
doubled	double
doubles	double
doubling	double
download	download
downloaded	download
downloading	download
downloads	download
draft	draft
drafted	draft
drafting	draft
drafts	draft
draw	draw
drawing	draw
drawn	draw
draws	draw
drew	draw
drive	drive
driven	drive
drives	drive
driving	drive
drop	drop
dropped	drop
dropping	drop
drops	drop
drove	drive
duplicate	duplicate
duplicated	duplicate
duplicates	duplicate
duplicating	duplicate
earn	earn
earned	earn
earning	earn
earns	earn
edit	edit
edited	edit
editing	edit
edits	edit
elect	elect
elected	elect
electing	elect
elects	elect
eliminate	eliminate
eliminated	eliminate
eliminates	eliminate
eliminating	eliminate
emailed	email
emailing	email
embed	embed
embeded	embed
embeding	embed
embeds	embed
employ	employ
employed	employ
employing	employ
employs	employ
enable	enable
enabled	enable
enables	enable
enabling	enable
enclose	enclose
enclosed	enclose
encloses	enclose
enclosing	enclose
end	end
ended	end
ending	end
endorse	endorse
endorsed	endorse
endorses	endorse
endorsing	endorse
ends	end
enforce	enforce
enforced	enforce
enforces	enforce
enforcing	enforce
engage	engage
engaged	engage
engages	engage
engaging	engage
enhance	enhance
enhanced	enhance
enhances	enhance
enhancing	enhance
enroll	enroll
enrolled	enroll
enrolling	enroll
enrolls	enroll
ensure	ensure
ensured	ensure
ensures	ensure
ensuring	ensure
enter	enter
entered	enter
entering	enter
enters	enter
equip	equip
equipped	equip
equipping	equip
equips	equip
escalate	escalate
escalated	escalate
escalates	escalate
escalating	escalate
establish	establish
established	establish
establishes	establish
establishing	establish
estimated	estimate
estimating	estimate
evaluate	evaluate
evaluated	evaluate
evaluates	evaluate
evaluating	evaluate
examine	examine
examined	examine
examines	examine
examining	examine
exceed	exceed
exceeded	exceed
exceeding	exceed
exceeds	exceed
exchange	exchange
exchanged	exchange
exchanges	exchange
exchanging	exchange
execute	execute
executed	execute
executes	execute
executing	execute
exempt	exempt
exempted	exempt
exempting	exempt
exempts	exempt
expand	expand
expanded	expand
expanding	expand
expands	expand
expect	expect
expected	expect
expecting	expect
expects	expect
expedite	expedite
expedited	expedite
expedites	expedite
expediting	expedite
expire	expire
expired	expire
expires	expire
expiring	expire
explain	explain
explained	explain
explaining	explain
explains	explain
export	export
exported	export
exporting	export
exports	export
express	express
expressed	express
expresses	express
expressing	express
extend	extend
extended	extend
extending	extend
extends	extend
extract	extract
extracted	extract
extracting	extract
extracts	extract
facilitate	facilitate
facilitated	facilitate
facilitates	facilitate
facilitating	facilitate
fail	fail
failed	fail
failing	fail
fails	fail
fed	feed
feed	feed
feeding	feed
feeds	feed
fetch	fetch
fetched	fetch
fetches	fetch
fetching	fetch
filed	file
filing	file
fill	fill
filled	fill
filling	fill
fills	fill
filter	filter
filtered	filter
filtering	filter
filters	filter
finalize	finalize
finalized	finalize
finalizes	finalize
finalizing	finalize
finance	finance
financed	finance
finances	finance
financing	finance
find	find
finding	find
finds	find
finish	finish
finished	finish
finishes	finish
finishing	finish
fix	fix
fixed	fix
fixes	fix
fixing	fix
flag	flag
flagged	flag
flagging	flag
flags	flag
follow	follow
followed	follow
following	follow
follows	follow
forecasted	forecast
forecasting	forecast
formalize	formalize
formalized	formalize
formalizes	formalize
formalizing	formalize
format	format
formated	format
formating	format
formats	format
formed	form
forming	form
forward	forward
forwarded	forward
forwarding	forward
forwards	forward
found	find
fulfill	fulfill
fulfilled	fulfill
fulfilling	fulfill
fulfills	fulfill
fund	fund
funded	fund
funding	fund
funds	fund
gain	gain
gained	gain
gaining	gain
gains	gain
gather	gather
gathered	gather
gathering	gather
gathers	gather
gave	give
generate	generate
generated	generate
generates	generate
generating	generate
get	get
gets	get
getting	get
give	give
given	give
gives	give
giving	give
go	go
goes	go
going	go
gone	go
got	get
grant	grant
granted	grant
granting	grant
grants	grant
grew	grow
group	group
grouped	group
grouping	group
groups	group
grow	grow
growing	grow
grown	grow
grows	grow
guarantee	guarantee
guaranteed	guarantee
guaranteeing	guarantee
guarantees	guarantee
guide	guide
guided	guide
guides	guide
guiding	guide
handle	handle
handled	handle
handles	handle
handling	handle
happen	happen
happened	happen
happening	happen
happens	happen
held	hold
help	help
helped	help
helping	help
helps	help
hire	hire
hired	hire
hires	hire
hiring	hire
hold	hold
holding	hold
holds	hold
identified	identify
identifies	identify
identify	identify
identifying	identify
implement	implement
implemented	implement
implementing	implement
implements	implement
import	import
imported	import
importing	import
imports	import
improve	improve
improved	improve
improves	improve
improving	improve
include	include
included	include
includes	include
including	include
increase	increase
increased	increase
increases	increase
increasing	increase
incur	incur
incured	incur
incuring	incur
incurs	incur
index	index
indexed	index
indexes	index
indexing	index
indicate	indicate
indicated	indicate
indicates	indicate
indicating	indicate
inform	inform
informed	inform
informing	inform
informs	inform
initiate	initiate
initiated	initiate
initiates	initiate
initiating	initiate
insert	insert
inserted	insert
inserting	insert
inserts	insert
inspect	inspect
inspected	inspect
inspecting	inspect
inspects	inspect
install	install
installed	install
installing	install
installs	install
instruct	instruct
instructed	instruct
instructing	instruct
instructs	instruct
insure	insure
insured	insure
insures	insure
insuring	insure
integrate	integrate
integrated	integrate
integrates	integrate
integrating	integrate
intend	intend
intended	intend
intending	intend
intends	intend
interview	interview
interviewed	interview
interviewing	interview
interviews	interview
introduce	introduce
introduced	introduce
introduces	introduce
introducing	introduce
invest	invest
invested	invest
investigate	investigate
investigated	investigate
investigates	investigate
investigating	investigate
investing	invest
invests	invest
invite	invite
invited	invite
invites	invite
inviting	invite
invoiced	invoice
invoicing	invoice
involve	involve
involved	involve
involves	involve
involving	involve
issue	issue
issued	issue
issues	issue
issuing	issue
itemize	itemize
itemized	itemize
itemizes	itemize
itemizing	itemize
join	join
joined	join
joining	join
joins	join
justified	justify
justifies	justify
justify	justify
justifying	justify
keep	keep
keeping	keep
keeps	keep
kept	keep
knew	know
know	know
knowing	know
known	know
knows	know
labeled	label
labeling	label
launch	launch
launched	launch
launches	launch
launching	launch
lead	lead
leading	lead
leads	lead
learn	learn
learned	learn
learning	learn
learns	learn
lease	lease
leased	lease
leases	lease
leasing	lease
leave	leave
leaves	leave
leaving	leave
led	lead
left	leave
lend	lend
lending	lend
lends	lend
lent	lend
let	let
lets	let
letting	let
license	license
licensed	license
licenses	license
licensing	license
limit	limit
limited	limit
limiting	limit
limits	limit
link	link
linked	link
linking	link
links	link
listed	list
listing	list
load	load
loaded	load
loading	load
loads	load
locate	locate
located	locate
locates	locate
locating	locate
lock	lock
locked	lock
locking	lock
locks	lock
log	log
logged	log
logging	log
logs	log
made	make
mail	mail
mailed	mail
mailing	mail
mails	mail
maintain	maintain
maintained	maintain
maintaining	maintain
maintains	maintain
make	make
makes	make
making	make
manage	manage
managed	manage
manages	manage
managing	manage
manufacture	manufacture
manufactured	manufacture
manufactures	manufacture
manufacturing	manufacture
map	map
mapped	map
mapping	map
maps	map
mark	mark
marked	mark
market	market
marketed	market
marketing	market
markets	market
marking	mark
marks	mark
match	match
matched	match
matches	match
matching	match
measure	measure
measured	measure
measures	measure
measuring	measure
meet	meet
meeting	meet
meets	meet
merge	merge
merged	merge
merges	merge
merging	merge
met	meet
migrate	migrate
migrated	migrate
migrates	migrate
migrating	migrate
modified	modify
modifies	modify
modify	modify
modifying	modify
monitor	monitor
monitored	monitor
monitoring	monitor
monitors	monitor
move	move
moved	move
moves	move
moving	move
negotiate	negotiate
negotiated	negotiate
negotiates	negotiate
negotiating	negotiate
nominate	nominate
nominated	nominate
nominates	nominate
nominating	nominate
noted	note
notified	notify
notifies	notify
notify	notify
notifying	notify
noting	note
obtain	obtain
obtained	obtain
obtaining	obtain
obtains	obtain
offered	offer
offering	offer
onboard	onboard
onboarded	onboard
onboarding	onboard
onboards	onboard
open	open
opened	open
opening	open
opens	open
operate	operate
operated	operate
operates	operate
operating	operate
optimize	optimize
optimized	optimize
optimizes	optimize
optimizing	optimize
ordered	order
ordering	order
organize	organize
organized	organize
organizes	organize
organizing	organize
outline	outline
outlined	outline
outlines	outline
outlining	outline
outsource	outsource
outsourced	outsource
outsources	outsource
outsourcing	outsource
oversee	oversee
overseed	oversee
overseeing	oversee
oversees	oversee
own	own
owned	own
owning	own
owns	own
pack	pack
package	package
packaged	package
packages	package
packaging	package
packed	pack
packing	pack
packs	pack
paid	pay
participate	participate
participated	participate
participates	participate
participating	participate
pay	pay
paying	pay
pays	pay
perform	perform
performed	perform
performing	perform
performs	perform
phoned	phone
phoning	phone
pick	pick
picked	pick
picking	pick
picks	pick
place	place
placed	place
places	place
placing	place
planned	plan
planning	plan
post	post
posted	post
posting	post
postpone	postpone
postponed	postpone
postpones	postpone
postponing	postpone
posts	post
predict	predict
predicted	predict
predicting	predict
predicts	predict
prepare	prepare
prepared	prepare
prepares	prepare
preparing	prepare
present	present
presented	present
presenting	present
presents	present
preserve	preserve
preserved	preserve
preserves	preserve
preserving	preserve
priced	price
pricing	price
print	print
printed	print
printing	print
prints	print
prioritize	prioritize
prioritized	prioritize
prioritizes	prioritize
prioritizing	prioritize
processed	process
processing	process
procure	procure
procured	procure
procures	procure
procuring	procure
produce	produce
produced	produce
produces	produce
producing	produce
profiled	profile
profiling	profile
program	program
programed	program
programing	program
programs	program
prohibit	prohibit
prohibited	prohibit
prohibiting	prohibit
prohibits	prohibit
projected	project
projecting	project
promote	promote
promoted	promote
promotes	promote
promoting	promote
propose	propose
proposed	propose
proposes	propose
proposing	propose
protect	protect
protected	protect
protecting	protect
protects	protect
prove	prove
proved	prove
proves	prove
provide	provide
provided	provide
provides	provide
providing	provide
proving	prove
provision	provision
provisioned	provision
provisioning	provision
provisions	provision
publish	publish
published	publish
publishes	publish
publishing	publish
purchased	purchase
purchasing	purchase
qualified	qualify
qualifies	qualify
qualify	qualify
qualifying	qualify
quantified	quantify
quantifies	quantify
quantify	quantify
quantifying	quantify
queried	query
querying	query
queued	queue
queuing	queue
quoted	quote
quoting	quote
raise	raise
raised	raise
raises	raise
raising	raise
ran	run
rank	rank
ranked	rank
ranking	rank
ranks	rank
rated	rate
rating	rate
reach	reach
reached	reach
reaches	reach
reaching	reach
read	read
reading	read
reads	read
realize	realize
realized	realize
realizes	realize
realizing	realize
receive	receive
received	receive
receives	receive
receiving	receive
recognize	recognize
recognized	recognize
recognizes	recognize
recognizing	recognize
recommend	recommend
recommended	recommend
recommending	recommend
recommends	recommend
reconcile	reconcile
reconciled	reconcile
reconciles	reconcile
reconciling	reconcile
recorded	record
recording	record
recover	recover
recovered	recover
recovering	recover
recovers	recover
recruit	recruit
recruited	recruit
recruiting	recruit
recruits	recruit
redeem	redeem
redeemed	redeem
redeeming	redeem
redeems	redeem
reduce	reduce
reduced	reduce
reduces	reduce
reducing	reduce
refer	refer
referred	refer
referring	refer
refers	refer
refine	refine
refined	refine
refines	refine
refining	refine
reflect	reflect
reflected	reflect
reflecting	reflect
reflects	reflect
refunded	refund
refunding	refund
refuse	refuse
refused	refuse
refuses	refuse
refusing	refuse
register	register
registered	register
registering	register
registers	register
regulate	regulate
regulated	regulate
regulates	regulate
regulating	regulate
reimburse	reimburse
reimbursed	reimburse
reimburses	reimburse
reimbursing	reimburse
reject	reject
rejected	reject
rejecting	reject
rejects	reject
release	release
released	release
releases	release
releasing	release
relocate	relocate
relocated	relocate
relocates	relocate
relocating	relocate
remain	remain
remained	remain
remaining	remain
remains	remain
remind	remind
reminded	remind
reminding	remind
reminds	remind
remove	remove
removed	remove
removes	remove
removing	remove
renew	renew
renewed	renew
renewing	renew
renews	renew
rent	rent
rented	rent
renting	rent
rents	rent
reorder	reorder
reordered	reorder
reordering	reorder
reorders	reorder
repair	repair
repaired	repair
repairing	repair
repairs	repair
repeat	repeat
repeated	repeat
repeating	repeat
repeats	repeat
replace	replace
replaced	replace
replaces	replace
replacing	replace
replenish	replenish
replenished	replenish
replenishes	replenish
replenishing	replenish
replied	reply
replies	reply
reply	reply
replying	reply
reported	report
reporting	report
represent	represent
represented	represent
representing	represent
represents	represent
requested	request
requesting	request
require	require
required	require
requires	require
requiring	require
reroute	reroute
rerouted	reroute
reroutes	reroute
rerouting	reroute
research	research
researched	research
researches	research
researching	research
reserved	reserve
reserving	reserve
reset	reset
reseted	reset
reseting	reset
resets	reset
resolve	resolve
resolved	resolve
resolves	resolve
resolving	resolve
respond	respond
responded	respond
responding	respond
responds	respond
restock	restock
restocked	restock
restocking	restock
restocks	restock
restore	restore
restored	restore
restores	restore
restoring	restore
restrict	restrict
restricted	restrict
restricting	restrict
restricts	restrict
restructure	restructure
restructured	restructure
restructures	restructure
restructuring	restructure
resume	resume
resumed	resume
resumes	resume
resuming	resume
retain	retain
retained	retain
retaining	retain
retains	retain
retrieve	retrieve
retrieved	retrieve
retrieves	retrieve
retrieving	retrieve
return	return
returned	return
returning	return
returns	return
revert	revert
reverted	revert
reverting	revert
reverts	revert
review	review
reviewed	review
reviewing	review
reviews	review
revise	revise
revised	revise
revises	revise
revising	revise
reward	reward
rewarded	reward
rewarding	reward
rewards	reward
roll	roll
rolled	roll
rolling	roll
rolls	roll
route	route
routed	route
routes	route
routing	route
run	run
running	run
runs	run
save	save
saved	save
saves	save
saving	save
saw	see
scan	scan
scanned	scan
scanning	scan
scans	scan
scheduled	schedule
scheduling	schedule
screen	screen
screened	screen
screening	screen
screens	screen
seal	seal
sealed	seal
sealing	seal
seals	seal
search	search
searched	search
searches	search
searching	search
secure	secure
secured	secure
secures	secure
securing	secure
see	see
seeing	see
seen	see
sees	see
select	select
selected	select
selecting	select
selects	select
sell	sell
selling	sell
sells	sell
send	send
sending	send
sends	send
sent	send
serve	serve
served	serve
serves	serve
serving	serve
set	set
sets	set
setting	set
settle	settle
settled	settle
settles	settle
settling	settle
share	share
shared	share
shares	share
sharing	share
ship	ship
shipped	ship
shipping	ship
ships	ship
shorten	shorten
shortened	shorten
shortening	shorten
shortens	shorten
show	show
showed	show
showing	show
shown	show
shows	show
sign	sign
signed	sign
signing	sign
signs	sign
simplified	simplify
simplifies	simplify
simplify	simplify
simplifying	simplify
sold	sell
sort	sort
sorted	sort
sorting	sort
sorts	sort
source	source
sourced	source
sources	source
sourcing	source
speak	speak
speaking	speak
speaks	speak
specified	specify
specifies	specify
specify	specify
specifying	specify
split	split
splits	split
splitting	split
spoke	speak
spoken	speak
sponsor	sponsor
sponsored	sponsor
sponsoring	sponsor
sponsors	sponsor
staff	staff
staffed	staff
staffing	staff
staffs	staff
stamp	stamp
stamped	stamp
stamping	stamp
stamps	stamp
standardize	standardize
standardized	standardize
standardizes	standardize
standardizing	standardize
start	start
started	start
starting	start
starts	start
state	state
stated	state
states	state
stating	state
stocked	stock
stocking	stock
stop	stop
stopped	stop
stopping	stop
stops	stop
store	store
stored	store
stores	store
storing	store
streamline	streamline
streamlined	streamline
streamlines	streamline
streamlining	streamline
strengthen	strengthen
strengthened	strengthen
strengthening	strengthen
strengthens	strengthen
structure	structure
structured	structure
structures	structure
structuring	structure
submit	submit
submits	submit
submitted	submit
submitting	submit
subscribe	subscribe
subscribed	subscribe
subscribes	subscribe
subscribing	subscribe
substitute	substitute
substituted	substitute
substitutes	substitute
substituting	substitute
subtract	subtract
subtracted	subtract
subtracting	subtract
subtracts	subtract
succeed	succeed
succeeded	succeed
succeeding	succeed
succeeds	succeed
suggest	suggest
suggested	suggest
suggesting	suggest
suggests	suggest
summarize	summarize
summarized	summarize
summarizes	summarize
summarizing	summarize
supervise	supervise
supervised	supervise
supervises	supervise
supervising	supervise
supplied	supply
supplying	supply
support	support
supported	support
supporting	support
supports	support
surveyed	survey
surveying	survey
suspend	suspend
suspended	suspend
suspending	suspend
suspends	suspend
switch	switch
switched	switch
switches	switch
switching	switch
synchronize	synchronize
synchronized	synchronize
synchronizes	synchronize
synchronizing	synchronize
tag	tag
tagged	tag
tagging	tag
tags	tag
take	take
taken	take
takes	take
taking	take
target	target
targeted	target
targeting	target
targets	target
taught	teach
teach	teach
teaches	teach
teaching	teach
tell	tell
telling	tell
tells	tell
terminate	terminate
terminated	terminate
terminates	terminate
terminating	terminate
test	test
tested	test
testing	test
tests	test
think	think
thinking	think
thinks	think
thought	think
told	tell
took	take
totaled	total
totaling	total
trace	trace
traced	trace
traces	trace
tracing	trace
track	track
tracked	track
tracking	track
tracks	track
trade	trade
traded	trade
trades	trade
trading	trade
train	train
trained	train
training	train
trains	train
transfer	transfer
transferred	transfer
transferring	transfer
transfers	transfer
transform	transform
transformed	transform
transforming	transform
transforms	transform
translate	translate
translated	translate
translates	translate
translating	translate
transmit	transmit
transmited	transmit
transmiting	transmit
transmits	transmit
transport	transport
transported	transport
transporting	transport
transports	transport
travel	travel
traveled	travel
traveling	travel
travels	travel
treat	treat
treated	treat
treating	treat
treats	treat
trigger	trigger
triggered	trigger
triggering	trigger
triggers	trigger
troubleshoot	troubleshoot
troubleshooted	troubleshoot
troubleshooting	troubleshoot
troubleshoots	troubleshoot
turn	turn
turned	turn
turning	turn
turns	turn
unblock	unblock
unblocked	unblock
unblocking	unblock
unblocks	unblock
undergo	undergo
undergoes	undergo
undergoing	undergo
undergone	undergo
understand	understand
understanding	understand
understands	understand
understood	understand
undertake	undertake
undertaken	undertake
undertakes	undertake
undertaking	undertake
undertook	undertake
underwent	undergo
unload	unload
unloaded	unload
unloading	unload
unloads	unload
unlock	unlock
unlocked	unlock
unlocking	unlock
unlocks	unlock
unpack	unpack
unpacked	unpack
unpacking	unpack
unpacks	unpack
unsubscribe	unsubscribe
unsubscribed	unsubscribe
unsubscribes	unsubscribe
unsubscribing	unsubscribe
update	update
updated	update
updates	update
updating	update
upgrade	upgrade
upgraded	upgrade
upgrades	upgrade
upgrading	upgrade
upload	upload
uploaded	upload
uploading	upload
uploads	upload
use	use
used	use
uses	use
using	use
utilize	utilize
utilized	utilize
utilizes	utilize
utilizing	utilize
validate	validate
validated	validate
validates	validate
validating	validate
value	value
valued	value
values	value
valuing	value
verified	verify
verifies	verify
verify	verify
verifying	verify
view	view
viewed	view
viewing	view
views	view
void	void
voided	void
voiding	void
voids	void
wait	wait
waited	wait
waiting	wait
waits	wait
warn	warn
warned	warn
warning	warn
warns	warn
weigh	weigh
weighed	weigh
weighing	weigh
weighs	weigh
went	go
win	win
winning	win
wins	win
withdraw	withdraw
withdrawing	withdraw
withdrawn	withdraw
withdraws	withdraw
withdrew	withdraw
withheld	withhold
withhold	withhold
withholding	withhold
withholds	withhold
witness	witness
witnessed	witness
witnesses	witness
witnessing	witness
won	win
work	work
worked	work
working	work
works	work
wrap	wrap
wrapped	wrap
wrapping	wrap
wraps	wrap
write	write
writes	write
writing	write
written	write
wrote	write
)__tsv__";

inline constexpr std::string_view irregular_verbs_tsv =
    R"__tsv__(am	be
are	be
been	be
began	begin
begun	begin
being	be
bought	buy
bound	bind
brought	bring
built	build
came	come
caught	catch
chose	choose
chosen	choose
could	can
dealt	deal
did	do
does	do
doing	do
done	do
drawn	draw
drew	draw
driven	drive
drove	drive
fed	feed
found	find
gave	give
given	give
gone	go
got	get
grew	grow
grown	grow
had	have
has	have
having	have
held	hold
is	be
kept	keep
knew	know
known	know
led	lead
left	leave
lent	lend
made	make
met	meet
might	may
paid	pay
ran	run
saw	see
seen	see
sent	send
should	shall
showed	show
shown	show
sold	sell
spoke	speak
spoken	speak
taken	take
taught	teach
thought	think
told	tell
took	take
undergone	undergo
understood	understand
undertaken	undertake
undertook	undertake
underwent	undergo
was	be
went	go
were	be
withdrawn	withdraw
withdrew	withdraw
withheld	withhold
won	win
would	will
written	write
wrote	write
)__tsv__";

}  // namespace procmatch::detail
