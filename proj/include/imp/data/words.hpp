// Generated by tools/gen_english_tables.py. Do not edit.
#pragma once

#include <string_view>

namespace imp::data {

// 10000 most frequent alphabetic English words, newline separated.
inline constexpr std::string_view kEnglishWords =
    "the\nto\nand\nof\na\nin\ni\nis\nfor\nthat\nyou\nit\n"
    "on\nwith\nthis\nwas\nbe\nas\nare\nhave\nat\nhe\nnot\nby\n"
    "but\nfrom\nmy\nor\nwe\nan\nyour\nall\nso\nhis\nthey\nme\n"
    "if\none\ncan\nwill\njust\nlike\nabout\nup\nout\nwhat\nhas\nwhen\n"
    "more\ndo\nno\nwere\nwho\nhad\ntheir\nthere\nher\nwhich\ntime\nget\n"
    "been\nwould\nshe\nnew\npeople\nhow\nsome\nalso\nthem\nnow\nother\nits\n"
    "our\nthan\ngood\nonly\nafter\nfirst\nhim\ninto\nknow\nsee\ntwo\nmake\n"
    "over\nthink\nany\nthen\ncould\nback\nthese\nus\nwant\nbecause\ngo\nwell\n"
    "said\nway\nmost\nmuch\nvery\nwhere\neven\nshould\nmay\nhere\nneed\nreally\n"
    "did\nright\nwork\nyear\nyears\nbeing\nday\ntoo\ngoing\nbefore\noff\nwhy\n"
    "made\nstill\ntake\ngot\nmany\nnever\nthose\nlife\nsay\nworld\ndown\ngreat\n"
    "through\nlast\ns\nwhile\nbest\nsuch\nlove\nman\nhome\nlong\nlook\nsomething\n"
    "use\nsame\nused\nboth\nevery\nam\ncome\npart\nstate\nthree\naround\nbetween\n"
    "always\nbetter\nfind\nhelp\nhigh\nlittle\nold\nsince\nanother\ndoes\nown\nthings\n"
    "under\nduring\ngame\nthing\ngive\nhouse\nplace\nschool\nagain\nnext\neach\nmr\n"
    "without\nagainst\nend\nfound\nmust\nshow\nbig\nfeel\nsure\nteam\never\nfamily\n"
    "keep\nmight\nplease\nput\nmoney\nfree\nsecond\nsomeone\naway\nleft\nnumber\ncity\n"
    "days\nlot\nname\nnight\nplay\nuntil\ncompany\ndoing\nfew\nlet\nreal\ncalled\n"
    "different\nhaving\nset\nthought\ndone\nhowever\ngetting\ngod\ngovernment\ngroup\nlooking\npublic\n"
    "top\nwomen\nbusiness\ncare\nstart\nsystem\ntimes\nweek\nalready\nanything\ncase\nnothing\n"
    "person\ntoday\nchange\nenough\neverything\nfull\nlive\nmaking\npoint\nread\ntold\nyet\n"
    "bad\nfour\nhard\nmean\nonce\nsupport\ntell\nincluding\nmusic\npower\nseen\nstates\n"
    "stop\nwater\nbased\nbelieve\ncall\nhead\nmen\nnational\nsmall\ntook\nwhite\ncame\n"
    "far\njob\nside\nthough\ntry\nwent\nyes\nactually\namerican\nlater\nless\nline\n"
    "order\nparty\nrun\nsays\nservice\ncountry\nopen\nseason\nshit\nthank\nchildren\neveryone\n"
    "general\ntrying\nunited\nusing\narea\nblack\nd\nfollowing\nlaw\nmakes\ntogether\nwar\n"
    "whole\ncar\nface\nfive\nkind\nmaybe\nper\npresident\nstory\nworking\ncourse\ngames\n"
    "health\nhope\nimportant\nleast\nmeans\nnews\nwithin\nable\nbook\nearly\nfriends\ninformation\n"
    "local\noh\npost\nt\nthanks\nvideo\nyoung\nago\nothers\nsocial\ntalk\ncourt\n"
    "fact\ngiven\nguys\nhalf\nhand\nlevel\nmind\noften\nsingle\nbecome\nbody\ncoming\n"
    "control\ndeath\nfood\nguy\nhours\noffice\npay\nproblem\nsouth\ntrue\nalmost\nfuck\n"
    "history\nknown\nlarge\nlost\nm\nresearch\nroom\nseveral\nstarted\ntaking\nuniversity\nwin\n"
    "wrong\nalong\nanyone\nelse\ngirl\njohn\nmatter\npretty\nremember\nair\nbit\nfriend\n"
    "hit\nneeds\nnice\nplaying\nprobably\nsaying\nunderstand\nyeah\nyork\nclass\nclose\ncomes\n"
    "idea\ninternational\nlooks\npast\npossible\nwanted\nb\ncause\ndue\nhappy\nhuman\nmembers\n"
    "months\nmove\nquestion\nr\nseries\nwait\nwoman\nask\ncommunity\ndata\nlate\nleave\n"
    "north\nsaw\nspecial\nwatch\nc\neither\nfucking\nfuture\nlight\nlow\nmillion\nmorning\n"
    "police\nshort\nstay\ntaken\nage\nbuy\ndeal\nrather\nreason\nred\nreport\nsoon\n"
    "third\nturn\nwhether\namong\ncheck\ndevelopment\nform\nfurther\nheart\nminutes\nmyself\nservices\n"
    "yourself\nact\nalthough\nasked\nchild\nfire\nfun\nliving\nmajor\nmedia\nphone\nplayers\n"
    "art\nbehind\nbuilding\neasy\ngonna\nmarket\nnear\nnon\nplan\npolitical\nquite\nsix\n"
    "talking\nwest\nworks\naccording\navailable\ne\neducation\nfinal\nformer\nfront\nkids\nlist\n"
    "ready\nsometimes\nson\nstreet\nbring\ncollege\ncurrent\nexample\nexperience\nheard\nlondon\nmeet\n"
    "program\ntype\nbaby\nchance\nfather\nmarch\nprocess\nsong\nstudy\nword\nacross\naction\n"
    "clear\ngave\ngets\nhimself\nmonth\noutside\nself\nstudents\nwords\nboard\ncost\ncut\n"
    "dr\nfield\nheld\ninstead\nmain\nmoment\nmother\nroad\nseems\nthinking\ntown\nwants\n"
    "de\ndepartment\nenergy\nfight\nfine\nforce\nhear\nissue\nplayed\npoints\nprice\nre\n"
    "rest\nresults\nrunning\nshows\nspace\nsummer\nterm\nwife\namerica\nbeautiful\ndate\ngoes\n"
    "killed\nland\nmiss\nproject\nsex\nshot\nsite\nstrong\naccount\nco\nespecially\neyes\n"
    "include\njune\nparents\nperiod\nposition\nrecord\nsimilar\ntotal\nw\nabove\nclub\ncommon\n"
    "died\nfilm\nhappened\nknew\nlead\nlikely\nmilitary\nperfect\npersonal\nsecurity\nshare\nst\n"
    "tv\nwon\nx\napril\ncenter\ncounty\ncouple\ndead\nenglish\nhappen\nhold\nindustry\n"
    "inside\nissues\nonline\nplayer\nprivate\nproblems\nreturn\nrights\nsense\nstar\ntest\nview\n"
    "weeks\nbreak\nbritish\ncompanies\nevent\nhigher\nhour\nl\nmember\nmiddle\nneeded\npresent\n"
    "result\nsorry\ntakes\ntraining\nwish\nanswer\nboy\ndesign\nfinally\ngirls\ngold\ngone\n"
    "guess\ninterest\njuly\nking\nlearn\npolicy\nsociety\nadded\nal\nalone\naverage\nbank\n"
    "brought\ncertain\nchurch\neast\nhands\nhot\nlonger\nmedical\nmovie\noriginal\npark\nperformance\n"
    "press\nreceived\nrole\nsent\nthemselves\ntried\nworked\nworth\nareas\nbecame\nbill\nbooks\n"
    "cool\ndirector\nexactly\ngiving\nground\nmeeting\nn\nprovide\nquestions\nrelationship\nseptember\nsound\n"
    "source\nusually\nvalue\nevidence\nfollow\nlives\nofficial\nok\nproduction\nrate\nreading\nround\n"
    "save\nstand\nstuff\ntax\nwhatever\namount\nblue\ncountries\ndavid\ndrive\neat\nfall\n"
    "fast\nfederal\nfeeling\nfelt\ngreen\nleague\nmanagement\nmatch\nmodel\np\npicture\nsize\n"
    "step\ntrust\ncentral\nchanges\nengland\nforward\ngroups\nhey\nkey\nmom\no\npage\n"
    "paid\nrange\nreview\nscience\ntrade\nuk\nupon\nvarious\nattention\nbrother\ncannot\ncharacter\n"
    "chief\ncup\nfootball\nhate\njames\nled\nlooked\nlower\nnatural\noctober\nproperty\nquality\n"
    "send\nstyle\nu\nvote\namazing\naugust\nblood\nchina\ncomplete\ndog\neconomic\nhell\n"
    "involved\nitself\nlanguage\nlord\nnovember\noil\nrelated\nserious\nstage\nterms\ntitle\nadd\n"
    "article\nattack\nborn\ndamn\ndecided\ndecision\nenjoy\nentire\nfrench\njanuary\nkill\nmet\n"
    "perhaps\npoor\nrelease\nsituation\ntechnology\nturned\nwebsite\nwritten\nchoice\ncode\nconsidered\ncontinue\n"
    "council\ncover\ncurrently\ndoor\nelection\neuropean\nevents\nf\nfinancial\nforeign\nhair\nincrease\n"
    "legal\nlose\nmichael\npick\nrace\nseem\nseven\nsign\nsimple\nsimply\nstaff\nsuper\n"
    "union\nwalk\nwashington\nbed\nbegan\nbuilt\ncareer\nchanged\ncrazy\ndaily\ndaughter\ndecember\n"
    "die\ndifficult\nfigure\nhospital\nknows\nloss\nmodern\nones\npaper\nparts\npopular\npublished\n"
    "safe\nstarting\nsystems\nversion\nvoice\nwhose\nwriting\narmy\naustralia\nearth\nforget\ngoal\n"
    "h\nhuge\ninternet\nlisten\nokay\npractice\nrules\nsea\nsir\nsuccess\ntowards\nv\n"
    "waiting\nways\naccess\nbase\nbelow\ncreated\ndeep\nfollowed\nla\nlol\nmark\nmissing\n"
    "offer\npass\nprofessional\nreleased\nrisk\nschools\nsleep\ntable\nten\ntruth\nball\nbox\n"
    "build\ncard\ncases\ndark\ndistrict\neurope\ngeorge\nindia\nmine\nminister\nnote\npercent\n"
    "piece\nproducts\nrecent\nseeing\nstraight\nvisit\nwall\nwanna\nwrote\nallowed\nboys\nculture\n"
    "etc\nfans\nfebruary\ngives\ngrowth\nincluded\nmarried\nofficer\npain\npaul\nplaces\nrespect\n"
    "response\nriver\nrock\nshall\nspeak\nspecific\nstandard\ntonight\nwrite\ny\nalbum\ncentury\n"
    "charge\ncold\ncreate\neffect\neight\nexcept\neye\nfunny\nii\nlimited\nmoving\nnetwork\n"
    "peace\nprovided\nrecently\nrequired\nsales\nspent\nstore\nstudent\ntomorrow\ntrack\nvia\nwatching\n"
    "weight\naddition\nahead\nallow\nanti\nassociation\nbeat\nbrown\ncapital\nchinese\ncommittee\nconference\n"
    "difference\ndouble\nexpect\ngas\nisland\nmoved\nnormal\nplans\npopulation\npotential\npressure\nradio\n"
    "russian\nstation\ntext\ntreatment\nwestern\nass\nbeginning\ncalifornia\ncampaign\ncertainly\ncompletely\ncontent\n"
    "credit\ncross\ndescribed\ndespite\nfemale\nfocus\ng\nhi\nhusband\nice\nindividual\ninteresting\n"
    "j\njoin\nkept\nleading\nloved\nmessage\nmiles\nnearly\nparticular\nprevious\nquickly\nregion\n"
    "reported\nsection\nsort\nspeed\ntravel\nconsider\ncontact\ndrop\nfair\nfeet\njesus\nkid\n"
    "link\npositive\nsale\nthroughout\ntour\nwelcome\nabsolutely\nadditional\nbeyond\nconditions\nearlier\nextra\n"
    "forces\nimmediately\njobs\nleaving\nminute\nnature\nnumbers\nquick\nsell\nsignificant\nstudies\nunless\n"
    "winning\nagree\ncanada\nclean\ncomputer\nconstruction\nepisode\nfavorite\nincome\njustice\nlevels\nmanager\n"
    "movement\nphoto\nposted\nsafety\nsan\nscene\nsold\nsounds\nspend\nstatement\nsun\nteams\n"
    "ability\nannounced\nasking\ncalling\ncoach\ncollection\ncontinued\ncosts\ndefinitely\ndesigned\nexpected\nfriday\n"
    "gun\nhappens\nheavy\nincludes\nknowledge\nparticularly\nsearch\nsubject\ntrain\nwide\nwow\nauthor\n"
    "centre\nclaim\ndad\ndeveloped\nfear\nfit\ngenerally\ngerman\nglobal\ngoals\ngotta\nhotel\n"
    "interested\njudge\nlady\nleader\nletter\nlines\nmaterial\nnamed\nnobody\nopportunity\nplus\npre\n"
    "product\nregular\nsecretary\nsister\nstories\nunit\nworkers\nannual\nanymore\nbar\nbattle\nbrain\n"
    "contract\ndegree\nfamilies\nfeatures\nfinished\nfloor\nfrance\ngrowing\nhurt\nimage\ninsurance\nmajority\n"
    "meant\nopening\nopinion\nphysical\npro\nreach\nrule\nseriously\nsports\nstupid\nsuccessful\nactive\n"
    "administration\napproach\naustralian\nbiggest\ncancer\ncivil\ndance\ndefense\ndirection\nindependent\nmaster\nnone\n"
    "reasons\nrussia\nship\nstock\ntrump\nweekend\nwonder\nworst\nafrica\nawesome\nband\nbeach\n"
    "cash\nclearly\ncommercial\ncompared\neffort\nended\nfan\nfighting\nimagine\nimpact\nlack\nlatest\n"
    "learning\nmultiple\nolder\noperation\norganization\npassed\npictures\nprotect\nsecret\nsenior\nspring\nsunday\n"
    "telling\nwear\nactivities\naddress\nanalysis\nanyway\nbought\ncalls\nchoose\nchristmas\ncolor\ncommission\n"
    "competition\ndetails\ndirect\ndream\neasily\nfinish\ngrand\nincreased\nindian\nk\nliterally\nluck\n"
    "marriage\nnames\nnecessary\npatients\nresources\nrich\nskin\nspeaking\nsupposed\nsweet\nthus\ntouch\n"
    "yesterday\ncaught\nclosed\ncongress\ndamage\ndirectly\ndisease\ndoctor\ndoubt\ndrink\ndriving\nestablished\n"
    "facebook\nfeels\nfish\ngay\ngermany\nglad\ngreater\ngrow\nlargest\nmachine\nnotice\noverall\n"
    "planning\nprofessor\nprograms\nrecords\nreports\nshown\nsit\ntrip\nassociated\nbasic\ncaptain\ncarry\n"
    "cars\ncrime\neffective\neffects\nexplain\nfully\nhighly\nholding\njapan\nlaws\nmale\nmrs\n"
    "parties\nplant\nreality\nsmith\nspot\ntexas\nwinter\nworse\nadvice\nagreement\naward\nblock\n"
    "broken\ncaused\nchallenge\ncharacters\nchristian\ncomment\nequipment\neventually\nhelped\nholy\nkilling\nlived\n"
    "lots\nnation\notherwise\npeter\nprices\nprimary\npurpose\nrates\nresponsible\nshop\nshowing\nsick\n"
    "teacher\ntheory\nuses\nwilliam\nagency\navoid\ncamera\ncatch\ncell\ncoast\ncomments\ndrug\n"
    "economy\nenvironment\nexecutive\nfoot\nhall\nmass\nmeaning\nmission\nnine\nofficers\noperations\npolitics\n"
    "pop\nproduced\nran\nsaturday\nstatus\ntherefore\ntrial\ntruly\nweather\nactivity\napp\napplication\n"
    "claims\ncoffee\ncomplex\ncondition\ndivision\nevening\nflight\nfreedom\ngoogle\nheat\nhighest\ninterview\n"
    "library\nlocated\nlocation\nmurder\nobama\noffered\nputting\nqueen\nseconds\nshowed\nsitting\nstanding\n"
    "stars\nwalking\naccept\nactual\nappear\nattempt\nbroke\nchannel\ndistance\neating\nexchange\nfat\n"
    "fell\nfinding\nglass\nlearned\nlosing\nmobile\nnorthern\nopened\nplaced\npowerful\nprior\nprotection\n"
    "reached\nreceive\nreligious\nride\nrobert\nroyal\nscreen\nserve\nsigned\nslow\nspecies\nspeech\n"
    "traffic\ntree\ntypes\nvs\nwearing\nwhom\nwonderful\nagreed\nairport\nanimals\nappears\nbegin\n"
    "benefits\nbottom\ncities\ndemand\nengine\neverybody\nfamous\nideas\ninvestment\nkeeping\nlie\nnotes\n"
    "partner\nplays\nraised\nruns\nsad\nsolution\nsongs\nsources\nsouthern\nsquare\nstopped\nstructure\n"
    "thomas\ntraditional\ntwice\nwind\nworry\namericans\nappeared\nbecomes\nbrand\nbus\ncent\nchicago\n"
    "count\ncovered\ncritical\ndigital\nforced\nfourth\nfresh\nlake\nmental\nmentioned\nmissed\nmostly\n"
    "mouth\nowner\nphotos\npreviously\nrealize\nremain\nscale\nscore\nseparate\nsmart\nstarts\nsurface\n"
    "throw\ntom\ntotally\ntwitter\nviews\nwedding\nacting\nactions\nafrican\narms\nbenefit\nbudget\n"
    "click\nestate\nfailed\nfaith\nfashion\nfeature\nfund\ngeneration\nhearing\nhill\njack\nlarger\n"
    "louis\nmetal\nmid\nparis\nprofile\npull\npush\nreturned\nrose\nseat\nseemed\nsexual\n"
    "target\nunderstanding\nvillage\nagent\nanimal\napply\nauthority\nbasis\nbecoming\nchris\ndraw\ndude\n"
    "employees\nenter\nex\nfollows\nfoundation\ngain\nhttp\nindividuals\njapanese\nleaders\nmemory\nprime\n"
    "projects\nring\nrise\nselling\nserved\nsilver\nsoul\nspread\nsupply\nwaste\nweird\nadult\n"
    "apparently\nartist\nchairman\nedition\nengineering\ngrade\nhappening\nhealthy\ninstitute\nmethod\nmike\nmonday\n"
    "nations\nobviously\noption\nprison\nprovides\nremains\nsenate\nsmaller\nsomebody\nstone\nstrength\nusers\n"
    "wild\nwindow\nwinner\narrived\nbag\nbet\ncamp\ncast\nchrist\ncontinues\ncorrect\ndangerous\n"
    "ed\nextremely\nfirm\ngreatest\nhandle\nimprove\nindeed\nleaves\nmovies\nnegative\nprevent\nremoved\n"
    "richard\nspirit\ntelevision\ntill\ntrouble\nusa\nvideos\nadvantage\napart\naware\ncat\ncustomers\n"
    "decide\ndinner\ndollars\neastern\nfifth\nfunction\ngift\nhelping\nherself\nimpossible\ninfluence\nitems\n"
    "joe\nlos\nmarketing\nmary\nmaterials\nnor\nproduce\nprogress\nproud\nrequire\nshooting\nshut\n"
    "standards\ntells\nthinks\nvan\nwood\nbackground\nbirth\nbridge\ncarried\ncharles\nclasses\ncompleted\n"
    "concept\ncopy\ndear\ndogs\ndrugs\nefforts\ngarden\nhost\nhousing\ninc\nisrael\njournal\n"
    "labor\nleadership\nlength\nlucky\nneither\nonto\npatient\npossibly\nprove\nrare\nsetting\nskills\n"
    "software\nthousands\ntough\nunits\nad\nalive\napple\nbalance\nbirthday\nbitch\nboss\ncards\n"
    "changing\nconnection\ndress\neasier\nfellow\nflorida\nhorse\nknowing\nliked\nmagic\nmanaged\nmap\n"
    "net\nowned\nrequest\nstick\nturns\nvehicle\nvolume\nwake\naid\nbeauty\nbelieved\nbillion\n"
    "busy\nbuying\ncells\nconcerned\nconversation\ncorner\ncriminal\ncultural\ndevelop\ndriver\nends\nexisting\n"
    "farm\nfile\nfix\nfly\nfrank\nguide\nimages\ninvestigation\nmexico\noperating\npaying\npresented\n"
    "raise\nresponsibility\nroll\nslightly\nsuggest\nsurprise\ntechnical\nthoughts\ntreat\nunique\nvariety\nviolence\n"
    "weapons\nyours\nyouth\nappreciate\nbigger\nbreaking\ndiscovered\ndont\ndry\nedge\nevil\nexcited\n"
    "forever\nfunds\nhelps\nhenry\ninjury\niron\nlovely\nmad\nmagazine\nmartin\nmodels\noffers\n"
    "ordered\nparliament\nprepared\nreference\nreligion\nsites\nsomewhere\nstated\nstrategy\nteachers\nweb\nwine\n"
    "accounts\nangeles\narm\naudience\nbay\nblog\ncloser\ncore\ndemocratic\ndescription\ndropped\nexcellent\n"
    "exist\nfigures\nforms\nguard\nhonest\nissued\njoined\njones\nlee\nlies\nlikes\nmedicine\n"
    "mention\nmountain\nnuclear\norders\nport\npresence\nreaction\nreduce\nshoot\nsides\nsolid\nspanish\n"
    "sport\nsteps\nstress\ntaste\ntea\nvictory\nafternoon\nassistant\nbritain\ncitizens\nclassic\nclothes\n"
    "decisions\nelectric\nemergency\nentered\nentirely\nfacts\nfailure\nfestival\nflat\nfuel\nharry\nhello\n"
    "houses\nill\ninitial\nintroduced\njohnson\nkick\nlinks\nmail\nmassive\nmatters\npair\npicked\n"
    "pieces\nplane\nplenty\nprince\nproper\nproviding\nquarter\nregional\nscott\nsession\nshape\nsky\n"
    "teaching\ntoward\ntransfer\nupper\nuseful\nvalley\nwatched\nwilling\nwindows\nzone\naccident\nadvanced\n"
    "alternative\nanywhere\narticles\nawards\nbear\nboat\nbringing\ncapacity\ncheap\nclimate\ncommunities\ndiscussion\n"
    "drinking\nduty\nfantastic\nfeelings\nflying\ngovernor\nhundred\nindustrial\njoint\nmix\nmuseum\noptions\n"
    "path\nplants\npolicies\npromise\nproposed\npurchase\nrain\nremove\nsigns\nspending\nsteel\nsteve\n"
    "supporting\nterrible\ntired\ntreated\nturning\nvice\nwarm\nafraid\narts\nbeer\nborder\ncanadian\n"
    "command\ncrew\ncrowd\ndating\ndick\nelements\nenemy\nensure\nenvironmental\nfilled\nfixed\nforest\n"
    "intelligence\nintended\nlabour\nlimit\nmoon\nocean\npowers\nprofit\nproof\nrepublican\nsoldiers\nsuit\n"
    "wins\nappearance\nasian\nattorney\nbanks\nbehavior\nben\nbodies\nbrothers\nbuildings\nchair\ncreating\n"
    "debt\ndomestic\nexpensive\ngrew\nhistorical\nhomes\nhonestly\nhonor\nim\njump\nlaunch\nlisted\n"
    "minimum\nnative\nnoted\noriginally\nplanned\npm\nray\nsets\nsuddenly\nsupreme\nsurvey\ntech\n"
    "trees\nupdate\nuser\nwriter\nyellow\nyounger\nancient\nattacks\ncharges\ncombined\ncommunication\nconnected\n"
    "contains\ndownload\nemail\nending\nexercise\nexpress\nflow\nformed\ngirlfriend\nhero\nillegal\nincreasing\n"
    "joke\nloan\nmethods\nofficials\nperformed\nplanet\nrelationships\nrestaurant\nscotland\nselected\nshared\nshopping\n"
    "soft\nstuck\nsugar\nsuggested\nsupported\nsurprised\ntaught\ntransport\naccepted\nadding\naffairs\nallows\n"
    "appeal\napplied\nappropriate\nartists\nboston\nca\nconfirmed\ndevice\ndrama\nentry\nera\nfactor\n"
    "feed\ngolden\ngrant\ngrown\nheads\nhoping\nkeeps\nlawyer\nlegs\nlying\nmeasures\nmistake\n"
    "ms\nmuslim\norganizations\nplatform\npool\npulled\nregarding\nrelations\nrequires\nroute\nsaved\nschedule\n"
    "scientific\nshoes\nsmoke\nsquad\nteach\ntesting\ntests\nvalues\nwalked\nwilliams\nya\nabuse\n"
    "angry\nbusinesses\ncandidate\ncomfortable\nconcern\ndeveloping\ndiscuss\nelections\nemotional\net\neverywhere\nfacilities\n"
    "falling\nfox\nguns\nhole\nholiday\ninterests\ninternal\nireland\nitalian\nitaly\njersey\nlaugh\n"
    "leg\nletters\nliberal\nlistening\nll\nloves\nlunch\nmax\nmilk\npack\npayment\nperform\n"
    "recorded\nrelatively\nsector\nsharing\nsnow\nstorm\nstreets\nstrike\nstudio\nsub\nweak\nyoutube\n"
    "actor\nadvance\napartment\nasia\nchain\nchapter\ncommitted\nconfidence\ncook\ncute\nequal\nfake\n"
    "finance\nfocused\nhits\nidentity\njourney\nkitchen\nkorea\nleads\nmaintain\nmeasure\nmm\nnumerous\n"
    "owners\nposts\nproperties\nquiet\nrevealed\nspecifically\nsplit\ntask\ntaxes\ntaylor\ntwenty\nurban\n"
    "acts\naffected\naircraft\napplications\napproved\napproximately\nargument\narrested\nclaimed\nconflict\nconsidering\ncorporate\n"
    "debate\ndetermined\ndistribution\ndocuments\nescape\nextended\nfactors\nfaster\nfault\nfill\nfilms\nflowers\n"
    "friendly\nladies\nlay\nlights\nmillions\nmixed\nphase\nproperly\npure\nreduced\nrequirements\nresidents\n"
    "revenue\nsam\nsat\nsecure\nsmile\nstrange\ntalent\ntemperature\nthousand\ntony\ntroops\ntruck\n"
    "votes\nah\nauthorities\nbasically\nbesides\nbird\nblame\nbob\nbowl\ncauses\nchicken\ncollected\n"
    "context\ncoverage\ndetermine\ndisplay\ndying\nelected\nexamples\nexperienced\nfalls\nfalse\nfired\nforgot\n"
    "funding\nidentified\niii\nincredible\ninspired\nlaunched\nma\nmeat\nministry\nmode\nneck\nnoticed\n"
    "novel\nobvious\npassing\npositions\nremaining\nscored\nshirt\nshots\nslowly\nstadium\nstores\nsurgery\n"
    "trading\ntuesday\nvision\nwhenever\nworried\nzero\nalex\nallowing\nbegins\nchampion\ncharged\ncream\n"
    "crisis\ndaniel\ndelivered\neditor\nestimated\neu\ngiant\niran\njail\njim\nkingdom\nliterature\n"
    "mayor\nminor\nmoments\nopposite\norange\nourselves\npages\nremained\nselection\nserving\nsignal\nstream\n"
    "struggle\nsuicide\ntalked\ntheme\nthursday\ntiny\ntypically\nun\nunfortunately\nusual\nvehicles\nvirginia\n"
    "voted\nvoting\nwalls\nwave\nalcohol\nassembly\nbreakfast\nbright\nbrings\ncapable\ncarrying\nchosen\n"
    "combination\nconservative\ncustomer\ncutting\ndesire\ndestroyed\ndraft\ndrunk\nessential\nfail\nfamiliar\nfinds\n"
    "granted\nguilty\nhumans\nhundreds\nid\nimproved\njewish\nlargely\nlaughing\nmarkets\nmedium\nohio\n"
    "opportunities\npapers\nperfectly\nrecommend\nreferred\nrelevant\nseek\nsending\nsolo\nspoke\nstands\ntalks\n"
    "ticket\nunable\nupset\nwing\nanswers\nbirds\nbomb\ncreative\ncycle\ndealing\ndirected\ndon\n"
    "educational\nentertainment\nextreme\nfacility\nfields\ngoods\nhang\nholds\ninfo\nmainly\nmaximum\nnewspaper\n"
    "offering\npainting\nrepublic\nreserve\nreturns\nrow\nsalt\nscared\nscottish\nshares\nstatistics\nswitch\n"
    "territory\nthreat\ntickets\nwales\nadults\naffect\nappointed\narmed\naside\nassistance\nbell\nblow\n"
    "bond\nboyfriend\ncareful\ncircumstances\ncommunications\nconcerns\ncontrolled\ncorporation\ncry\ndanger\ndeals\ndelivery\n"
    "deserve\ndevices\ndollar\ndreams\nempty\nenjoyed\nexplained\nfaces\nfolks\nfucked\ngender\ninstance\n"
    "kim\nkinda\nmatches\nmile\nmotion\nmoves\nnick\npacific\nprize\nrealized\nreasonable\nreceiving\n"
    "register\nresolution\nrural\nryan\nsaving\nsees\nsinging\nspain\ntools\ntypical\nuniverse\nwarning\n"
    "wars\nwednesday\nadmit\nattitude\nbranch\nbrazil\nconducted\ndecades\ndedicated\ndefinition\ndrawing\nfavor\n"
    "flag\nframe\nguest\nha\nheaven\nindependence\ninstitutions\njackson\nkiss\nload\nplot\npossibility\n"
    "random\nrecovery\nrent\nreplace\nrepresent\nreviews\nscenes\nseeking\nsenator\nsentence\nteeth\ntips\n"
    "trained\nunderstood\nacademic\nacademy\naccurate\nachieve\nadam\nafford\nandrew\nassume\nbbc\nbottle\n"
    "bunch\ncategory\nchat\ncheese\nchemical\nclinton\ncompetitive\ndetail\ndiet\nem\nfavourite\nfruit\n"
    "harder\nindex\nitem\nlane\nmess\nnavy\nnormally\noccurred\nopposition\nparent\npermanent\npersonally\n"
    "pleasure\nprefer\nprogramme\nrepresentative\nscheme\nshift\nstood\nstorage\ntank\ntend\ntight\ntransportation\n"
    "ultimately\nunlike\nweekly\nyard\nanybody\nassets\nbasketball\nbutton\ncandidates\ncombat\nconstitution\nconsumer\n"
    "counter\ncreation\ncrown\ncrying\ndc\ndefined\ndepending\ndepression\ndescribe\ndrivers\nel\nemployment\n"
    "exclusive\nexcuse\nexpert\nfrequently\ngolf\ngrace\nhopefully\nidentify\nimportance\nkevin\nlaid\nlatter\n"
    "manufacturing\nmining\nobject\npartners\npattern\nperforming\npersonnel\nperspective\npregnant\npremier\npromote\nq\n"
    "revolution\nrooms\nsevere\nsleeping\nsuppose\ntool\ntournament\nturkey\nve\nvictim\nvictims\nagents\n"
    "amazon\narrest\nattend\nban\nbrilliant\ncarbon\ncatholic\nchose\ncircle\nconcert\ncrash\ndeclared\n"
    "deliver\ndepth\ndeputy\ndirty\ndoctors\nearned\nelectronic\nerror\nexistence\nexperiences\nexpression\nfactory\n"
    "headed\ninterior\njoy\njr\nlegislation\nmaintenance\nmanner\nmate\nmatt\nnearby\nnoise\norigin\n"
    "pakistan\npanel\npersonality\nplate\npractices\nprepare\nrelief\nreplaced\nresistance\nretail\nrice\nroads\n"
    "roof\nshame\nships\nsomewhat\nstaying\nstronger\nsurely\ntip\nupdated\nwriters\nabsolute\nadvertising\n"
    "agencies\nbaseball\nbathroom\nbible\ncable\ncalm\nchampionship\nchecked\nclient\nconstant\nda\ndates\n"
    "degrees\ndemocrats\ndoors\ndriven\ndumb\nempire\nexciting\nexpansion\nheavily\nhide\nincident\nirish\n"
    "linked\nmanage\nmessages\nmichigan\nmulti\nnfl\npoliticians\nprint\nquit\nrefused\nreporting\nsight\n"
    "significantly\nsing\nsoviet\nweapon\nwet\nwidely\nworldwide\nages\nanniversary\nattractive\nbike\nbroad\n"
    "burn\ncake\ncausing\nclosely\nconstantly\ncontest\ndeaths\ndepends\ndrawn\nfees\nfrancisco\nhaha\n"
    "hardly\nhat\nheight\nhidden\nhong\ninvited\nletting\nloud\nmanchester\nmarine\nmotor\nofficially\n"
    "pc\npeak\nportion\npounds\nprincess\nprotein\nputs\nraw\nreform\nregions\nrepresented\nrespond\n"
    "retirement\nsample\nseats\nsecondary\nsolar\nsomehow\nstayed\nsuffering\nsydney\ntries\nultimate\nunknown\n"
    "wilson\nwondering\nattached\nattacked\nautomatically\nballs\nbattery\nbills\nblind\nbreath\nbrief\ncarolina\n"
    "chest\nconduct\ndebut\ndecade\ndestroy\ndifferences\nedward\nengaged\nexperts\nexpressed\nexternal\nfantasy\n"
    "ft\ngrab\nhollywood\nimmediate\nintroduction\njoseph\nlicense\npaint\npilot\npink\npresidential\nprincipal\n"
    "recognize\nrecognized\nregistered\nregularly\nrepresentatives\nrising\nseasons\nshipping\nsinger\nsmoking\nsteam\nsuffered\n"
    "survive\ntall\nthats\ntheatre\ntherapy\nwitness\nadopted\naim\ncampus\ncap\nchances\nchildhood\n"
    "clinical\nclubs\ncomedy\ncommander\ncomparison\ncovers\ndan\ndefeat\ndefence\ndemocracy\ndetailed\nentitled\n"
    "exact\nexposed\nfed\nfee\ninjured\njan\njordan\nkinds\nlets\nloans\nlock\nmusical\n"
    "nose\nobjects\nopposed\norganized\nplastic\nprotected\npurposes\nquote\nrecording\nsemi\nstatements\nsuspect\n"
    "swear\ntechniques\ntie\ntim\ntrend\nvaluable\nwealth\nwise\nyards\naged\napproval\naspects\n"
    "attempts\nbread\nburning\nchampions\ncontain\nconvention\ndancing\ndocument\neggs\nemployee\nen\nengineer\n"
    "equivalent\nfacing\nfairly\nfingers\nford\nfounded\nfunctions\ngang\ngraduate\ngreek\nhanging\ninner\n"
    "islands\nle\nlift\nmarked\nmemories\nmiller\nmonthly\nmountains\nneighborhood\noperate\noutstanding\npermission\n"
    "porn\nracing\nrecommended\nregulations\nreply\nrepublicans\nrid\nroman\nscientists\nshoulder\nshower\nsolutions\n"
    "sons\nstations\nstephen\ntower\ntradition\nvisited\nvisual\nwheel\nzealand\nachieved\nadmitted\nappointment\n"
    "authors\nbarely\nbc\nbush\ncabinet\ncelebrate\nchallenges\nchocolate\ncoal\ncolour\ncontemporary\ncriticism\n"
    "davis\ndna\neffectively\neric\nextensive\nfaced\nfiled\nformation\nfought\ngained\ngallery\nhighway\n"
    "historic\nhunt\nimprovement\ninch\ninitially\njunior\njury\nkong\nkorean\nmarks\nmonster\nobtained\n"
    "olympic\nphilosophy\npride\npromised\nrepeat\nreturning\nriding\nrough\nsanta\nsettlement\nsmell\nsought\n"
    "speaker\nstudied\nsuggests\nsurrounding\ntone\ntopic\ntoronto\nuniversal\nvast\nvisitors\nwanting\nauto\n"
    "consistent\ncontinuing\nearn\nexists\nfinger\ngrey\nguitar\nheading\nhoward\nignore\ninvolving\nlatin\n"
    "lewis\nmeal\nmeanwhile\nmeetings\nnaturally\nnecessarily\noffices\npants\npartnership\npayments\npercentage\npocket\n"
    "practical\nprimarily\nproved\nrape\nregardless\nrelative\nrepresents\nrescue\nresulting\nrush\nsarah\nsessions\n"
    "sharp\nsimon\nsoccer\nstable\nstructures\nsupplies\nsymptoms\ntemporary\ntested\ntrick\nattended\naudio\n"
    "bone\nbrian\nbullshit\nchamber\nchart\ncircuit\nclothing\ncomplicated\nconfused\nconsequences\ndefend\ndivided\n"
    "elizabeth\neveryday\nextent\nfishing\nformat\ngap\ngate\ngotten\nharm\nhealthcare\nhousehold\nimmigration\n"
    "impressive\njews\njoining\nkiller\nlesson\nlimits\nloving\nltd\nmanagers\nmembership\nmiami\nmirror\n"
    "mount\nnights\noccur\nparking\nproposal\nprovince\npurchased\nrecognition\nreputation\nrolling\nshortly\nsituations\n"
    "strongly\ntears\ntechnique\nthin\ntied\nz\naccused\nadventure\nargue\nassessment\natmosphere\nawful\n"
    "bedroom\nbelief\nbound\nbreaks\ncarefully\ncats\nceo\nchoices\nclosing\ncloud\ncolorado\ncolors\n"
    "contrast\ncourses\ncourts\ndonald\ndrew\negg\nelement\nelsewhere\nestablish\nextension\nfiles\nfounder\n"
    "gear\ngeorgia\nhills\nhip\nhitting\nincreases\ninfrastructure\njason\nlocations\nloose\nmachines\nmoral\n"
    "offensive\npa\npackage\npointed\npoverty\nprocesses\nprocessing\nqualified\nrailway\nreaching\nridiculous\nsensitive\n"
    "server\nshock\nsilence\nsoldier\nsuperior\nsupporters\nthick\nthrew\ntons\ntransition\nviolent\nvoters\n"
    "wash\nacid\nactress\nadministrative\nalan\nalongside\nangel\nanxiety\nbabies\nbars\nbonus\ncastle\n"
    "charity\nclients\ncompare\ncontained\ncooking\ncovering\ncurious\ndirectors\ndiscovery\ndiscussed\nduke\negypt\n"
    "encourage\nenforcement\nfeaturing\nfinals\nflash\nformal\nformula\nfort\ngovernments\ngray\ngross\nhorses\n"
    "hungry\ninformed\ninnocent\njeff\nlosses\nluke\nmac\nmath\nminds\nmistakes\nmystery\nnetworks\n"
    "olympics\npalace\npasses\npenalty\npet\nphones\nphotography\nproducing\nprotest\npublication\nrating\nrefer\n"
    "respectively\nrome\nscheduled\nselect\nsilent\nspoken\nsuccessfully\nsuffer\ntemple\ntracks\ntrail\nuncle\n"
    "unusual\nwaters\nwoods\nyo\narrival\nasks\nassault\nawareness\nbadly\nbath\ncaptured\nchase\n"
    "components\nconcrete\ndave\ndeeply\nexpectations\nexplanation\nexposure\nfeatured\nfiction\nguarantee\nhappiness\nharris\n"
    "hearts\nhorrible\nideal\nillinois\ninjuries\nislamic\njimmy\nkelly\nlegend\nlieutenant\nmini\nmood\n"
    "muscle\nmuslims\npassion\npicking\npleased\nprocedure\nproducer\npushing\nrank\nreplacement\nretired\nroles\n"
    "sand\nsavings\nsettled\nshadow\nsingles\ntag\ntape\nthread\nvictoria\nvisiting\nwage\nwings\n"
    "andy\navenue\nbags\nbeating\nbelieves\nblocks\nboring\ncharlie\nchecking\nclock\ncommissioner\ncommitment\n"
    "confident\ncontaining\ncopies\ncrimes\ncustom\ndenied\ndesk\ndrinks\near\nelectricity\nepisodes\nfarmers\n"
    "fbi\ngrounds\ngym\nhelpful\nhorror\niphone\niraq\nlabel\nliverpool\nlocked\nnaked\nny\n"
    "opens\noutput\npersons\npitch\npizza\nplain\npushed\nraising\nrear\nreveal\nromantic\nscores\n"
    "sisters\nspeaks\nstages\nstrategic\nswimming\nwelfare\nwinners\nwire\nworker\nafterwards\nalright\nandroid\n"
    "anger\narchitecture\nassist\nattempted\nbehalf\nbelt\ncapture\ncenters\nceremony\ncomic\ncops\ncuts\n"
    "dallas\ndesigner\ndiamond\ndisappointed\ndressed\neconomics\nefficient\nelectrical\nemployed\nenjoying\nentering\nessentially\n"
    "establishment\nexpecting\nexplains\nflower\nghost\nguests\nhanded\nhockey\nhouston\nhttps\nhunting\nindustries\n"
    "islam\njane\njudges\nkit\nlab\nlanguages\nmaps\nmin\nmorgan\nmoscow\nna\nnervous\n"
    "newly\nodd\nop\nordinary\nparticipate\nphiladelphia\nprayer\nprinciples\nracist\nrarely\nreferences\nsexy\n"
    "skill\nsoil\nsolve\nstomach\nstruck\nstudying\nsuck\nsupports\ntrash\nugly\nvegas\nvirus\n"
    "walker\nwhoever\namounts\nanthony\narthur\naspect\nbanned\nboost\nbureau\ncolonel\ncomfort\ncontrols\n"
    "cousin\ncrack\ndeck\ndemands\ndies\ndragon\ndramatic\ndust\ndutch\nengineers\nevolution\nfoods\n"
    "hired\nillness\ninspiration\ninstitution\nkings\nknife\nlately\nlowest\nmemorial\nmexican\nminority\nmum\n"
    "opinions\npatterns\npresents\npriority\npromotion\nrail\nreaders\nremote\nrepair\nroot\nsaint\nsteal\n"
    "stolen\ntelephone\ntho\ntitles\ntrans\nups\nvol\nwhereas\nabandoned\nacquired\nactors\nalexander\n"
    "alliance\nannoying\nap\nbid\nbro\nbuddy\nburied\nbutter\ncares\ncolumbia\nconclusion\nconfirm\n"
    "congratulations\ncontracts\nconvinced\ncrap\ncrystal\ndean\ndecent\ndecline\ndelay\ndescribes\ndesert\ndowntown\n"
    "elite\nenemies\nforgotten\nforth\ngods\nhire\nhop\nhopes\ninsane\ninstalled\nisraeli\nlanding\n"
    "layer\nmanaging\nmarry\nnah\nnowhere\nnurse\nobtain\norganic\nownership\nparticipants\npennsylvania\npoetry\n"
    "pot\npray\nprinted\nrecall\nrugby\nsake\nsheet\nsigning\nsmooth\nspiritual\nstops\nstring\n"
    "sudden\nsweden\nsyria\nthrowing\nthrown\nvacation\nabroad\narab\nassigned\nassociate\nassumed\natlantic\n"
    "bench\nbother\nbroadcast\nbye\ncambridge\ncitizen\ncleaning\ncompete\nconsists\nconsumers\ncontributed\ncricket\n"
    "critics\ndamaged\ndisaster\ndiscover\ndisney\nentrance\nequally\nfallen\nfigured\nfitness\nfrancis\nfriendship\n"
    "gary\nhandling\nidiot\nintense\nkeys\nlawyers\nlifetime\nliquid\nmakeup\nmedal\nmortgage\nnarrative\n"
    "narrow\nnba\nobserved\noccasionally\npan\nphysics\nposting\npotentially\nreduction\nreflect\nrefuse\nresearchers\n"
    "resource\nroger\nross\nsciences\nseattle\nserves\nshell\nsilly\nsubsequent\ntowns\ntranslation\nvisible\n"
    "yep\nadds\nallen\namendment\nangle\narizona\narrive\nbelong\nberlin\nbishop\nchannels\nclark\n"
    "commonly\nconnect\ndefensive\ndesigns\nefficiency\nenterprise\nexperiment\nfeb\nfemales\nfindings\nfirms\nforum\n"
    "gifts\ngrass\nhence\nincreasingly\nincredibly\niv\njay\njournalist\nkicked\nlessons\nlists\nmaintained\n"
    "mill\nmo\noccasion\noxford\npace\npassenger\npen\npope\npossession\npp\nraces\nrapid\n"
    "regulation\nresident\nrocks\nshaped\nsixth\nspin\nstyles\nsubjects\nsucks\nsuitable\nthirty\nvalid\n"
    "vital\nwhilst\nagriculture\nalleged\nanna\natlanta\nbands\nchristians\ncollect\ncommerce\ncop\ncreek\n"
    "currency\nemotions\nexhibition\nfraud\nfuneral\ngenuine\ngordon\nhoney\nhonour\nhook\nhunter\nimmigrants\n"
    "improving\ninstructions\nintroduce\nkansas\nkm\nlands\nlegacy\nlog\nmatthew\nmerely\nmonitor\nnov\n"
    "patrick\nphil\nprisoners\nprogramming\npublishing\nratio\nregret\nrejected\nremind\nresort\nresulted\nreverse\n"
    "routine\nscary\nseed\nsettle\nsin\nspell\nsummary\nsurvival\nsword\ntongue\nward\nwaves\n"
    "wayne\nachievement\nanderson\nargued\nasleep\naustin\nautomatic\nbegun\nbehaviour\ncd\ncents\ncoat\n"
    "comprehensive\nconsent\ndaddy\ndestruction\ndiego\ndiseases\ndivorce\ndoc\ndrove\nears\nengage\nextraordinary\n"
    "fate\nfrequency\ngaming\ngene\nglory\nheadquarters\nheritage\ninitiative\ninterviews\njean\njuice\nlandscape\n"
    "logic\nmeets\nmelbourne\nmicrosoft\nobjective\norganisation\nprivacy\nprocedures\nprofits\nreducing\nregard\nrepresenting\n"
    "residence\nroughly\nsalary\nscoring\nscript\nsearching\nsections\nstrip\nsurrounded\nthreatened\ntransferred\ntube\n"
    "universities\nwalter\nwisconsin\nwrites\nambassador\nann\napps\nawarded\nbanking\nbreast\ncant\ncarter\n"
    "chelsea\nchemistry\nconcluded\nconsumption\ncorruption\ncotton\ncrossed\ndetroit\ndiscount\ndozen\nengines\nepic\n"
    "exception\nexit\nexpand\nfancy\ngorgeous\ngrateful\nheroes\nholes\nimpression\ninches\nindicate\ninput\n"
    "johnny\njosh\nknock\nleather\nlips\nluxury\nlyrics\nmanufacturers\nmasters\nmovements\noct\noperated\n"
    "ought\noutcome\npainted\npoll\npreferred\npulling\nranked\nreferring\nremoval\nrep\nreporter\nrio\n"
    "risks\nrob\nscreaming\nsept\nsequence\nsingapore\nstretch\ntear\ntennis\nterrorist\ntheater\nties\n"
    "twelve\nversions\nvirgin\nvoices\nwishes\nwolf\nabsence\nagricultural\nasshole\nate\nathletes\nbears\n"
    "blues\nboxes\nbruce\nbull\ncameras\ncommonwealth\ncontribute\ncontribution\ncontributions\ncouples\ndelicious\ndeny\n"
    "deserves\nease\nextend\nfame\nflood\ngenerated\ngenetic\nglasses\nimpressed\nindicated\ninstant\ninvestors\n"
    "involves\nkate\nkills\nliberty\nmaria\nministers\nmonitoring\noccurs\npassengers\nphotographs\nprinciple\nproducers\n"
    "progressive\npunishment\nrally\nrapidly\nreader\nrepresentation\nrestaurants\nreveals\nroots\nsamples\nshops\nsum\n"
    "swing\ntail\ntexts\ntwin\nupcoming\nveterans\nalert\narena\narguments\naug\nbilly\nboom\n"
    "boots\nbrave\nclaiming\ncolumn\ncommit\ncompensation\ncomposition\ncomputers\nconservation\nconstitutional\ncrossing\ndefending\n"
    "density\ndi\ndifficulty\ndropping\ndrops\nelementary\nethnic\nexpenses\nfleet\nfoster\nfuckin\nfundamental\n"
    "gen\ngenius\ngreatly\nguidance\nhospitals\ninfection\ninstagram\nintention\niowa\njokes\nknee\nmechanical\n"
    "nigeria\nparks\nparticipation\nperiods\nprecious\npregnancy\npremium\npreparing\npretend\npriest\nprominent\nproven\n"
    "radical\nremembered\nrequested\nresidential\nreward\nrings\nrobin\nrussell\nsatellite\nshake\nshore\nspots\n"
    "stats\nstruggling\nsubstantial\nteen\ntemperatures\ntransmission\ntrap\nuniform\nwildlife\nwooden\nads\naggressive\n"
    "anne\nanswered\napparent\nbang\nblast\nbones\nbrands\ncenturies\ncommunist\ncomplaint\ncomponent\nconnections\n"
    "courage\ncure\ndel\ndesperate\ndiversity\nduties\nencouraged\neve\nfaculty\nfeedback\nfighter\nfrozen\n"
    "guards\nhiding\nhumanity\nian\nil\ninnovation\ninstruments\ninvest\njacket\njustin\nlegislative\nlisting\n"
    "manual\nmothers\nmurdered\nnursing\noccupied\nongoing\noperator\npainful\npound\npreparation\npunch\npurple\n"
    "railroad\nregistration\nreleases\nrick\nromance\nsubmitted\nsufficient\nsurvived\nsuspended\ntechnologies\ntissue\ntrailer\n"
    "trends\ntrials\nukraine\nunderground\nversus\nvirtual\nwalks\nwounded\nali\namongst\nannouncement\narranged\n"
    "arsenal\nattending\nattracted\nbiological\nbite\nblocked\nboards\nburned\ncategories\nchecks\nchip\nconcerning\n"
    "dare\ndatabase\ndefine\ndiscrimination\ndisorder\ndistributed\ndistricts\ndocumentary\ndomain\ndynamic\nedited\nengagement\n"
    "explore\nfavour\nfewer\nfootage\ngiants\ngrave\nhamilton\nimplementation\nindiana\ninvestigate\njazz\njon\n"
    "jonathan\nlaboratory\nlawrence\nlincoln\nliterary\nmask\nmassachusetts\nmidnight\nminnesota\nmouse\noscar\npacked\n"
    "piano\npraise\npresentation\npsychology\nrelation\nrestrictions\nrocket\nruin\nsaudi\nsean\nsec\nsecrets\n"
    "slave\nstability\nsteady\nstones\nsymbol\nterminal\ntoilet\ntreaty\ntriple\nunlikely\nupdates\nvietnam\n"
    "viewed\naffair\nagenda\nbat\nbow\ncalendar\ncape\ncollective\nconversations\ncooperation\ncraft\ndarkness\n"
    "deeper\ndevil\nedit\nenable\nequity\nestimates\nfailing\nfinishing\nfortune\ngates\ngoodbye\ngraham\n"
    "hardware\nhillary\nhurts\nintellectual\ninvite\ninvolvement\nkentucky\nmadrid\nmi\nnuts\noregon\npartly\n"
    "petition\nphrase\nphysically\nprotecting\nracial\nrated\nregime\nrivers\nrounds\nruled\nsa\nsauce\n"
    "seal\nseparated\nshield\nsimilarly\nslide\nstem\nsummit\ntalented\nthroat\ntiger\ntouched\ntoy\n"
    "visits\nwarriors\nwisdom\naccounting\nalien\nattacking\nawkward\nbeast\nbeef\ncandy\ncarrier\ncelebration\n"
    "celebrity\ncertificate\ncited\nclay\ncoaching\ncolleagues\nconstructed\ndated\ndec\ndefault\ndelhi\nderived\n"
    "dialogue\ndisabled\ndistinct\ndrag\neducated\neligible\nestimate\nexecution\nexisted\nfifty\nfollowers\nfool\n"
    "framework\nfranchise\nfunded\nfurniture\ngenerations\nguaranteed\nintegrated\nintelligent\ninteraction\njet\njournalists\nlifestyle\n"
    "lighting\nlisa\nloop\nmall\nmp\noverseas\nperformances\nphilippines\npolish\nrecommendations\nrecover\nregarded\n"
    "relax\nreliable\nrely\nremarkable\nresponses\nruling\nsacrifice\nse\nsole\nstopping\nstrategies\nsucceed\n"
    "tables\ntale\ntargets\ntiming\nton\nvolunteers\nwitnesses\nwore\nworship\nworthy\nacted\nalarm\n"
    "bass\nbloody\nbreathing\nbutt\ncharacteristics\ncnn\ncollaboration\ncon\nconsideration\ncounts\ncreates\ncrucial\n"
    "daughters\ndependent\ndiscussions\ndrives\ndual\nedinburgh\nequipped\nexpanded\nexperimental\nfeeding\nfilter\ngalaxy\n"
    "globe\ngrades\ngreece\ngulf\nhighlights\nhoped\nintent\ninvolve\njudgment\nkennedy\nknight\nlarry\n"
    "las\nlmao\nlogo\nmalaysia\nmature\nmoore\nnazi\nnetherlands\nodds\npeaceful\nphilip\nphotographer\n"
    "pin\nprevention\nprinting\npromoting\npublicly\npump\nrepeated\nreplied\nrequests\nrevenge\nsatisfied\nseeds\n"
    "signals\nslip\nspaces\nspare\nspecialist\nstocks\nstranger\nsubmit\nsurprising\ntap\nthompson\nthreats\n"
    "tourism\nturkish\nvolunteer\nacceptable\nallies\nattempting\nauction\nbonds\nchallenging\nchaos\nchurches\ncleveland\n"
    "cm\ncomposed\nconcentration\ncopper\ncorp\ncorps\ncounting\ncredits\ndawn\ndispute\nearnings\nediting\n"
    "executed\nfiring\nfits\nfrequent\ngardens\ngathered\nhilarious\nhuh\nignored\nimprovements\ninvestments\nisis\n"
    "margin\nmars\nmaryland\nmechanism\nmoderate\nmurray\noklahoma\nopera\novercome\nparallel\npassage\npit\n"
    "psychological\npublications\nquest\nradiation\nshocked\nsized\nstroke\nstunning\ntanks\ntokyo\ntopics\ntrains\n"
    "traveling\ntreating\ntune\nutility\nvessel\nweed\nwherever\nacquisition\naddressed\nalabama\nalice\nangels\n"
    "anime\nannounce\nautumn\nbacked\nbarry\nbold\nborders\nbreathe\ncameron\nchoosing\nclassical\nclassified\n"
    "clip\ncoaches\ncoins\nconcepts\nconspiracy\ncontroversy\nconvince\ncooper\ndisappeared\neh\nencounter\nequality\n"
    "exam\nexamination\nfails\nfederation\nfi\nfiscal\nguardian\nhd\nhomeless\ninstrument\nintervention\njerry\n"
    "lover\nmainstream\nmenu\nmissouri\nmounted\nmutual\nnope\noccasions\noffense\noral\npanic\npays\n"
    "peoples\npursue\nrealise\nrefugees\nremoving\nrequirement\nresponded\nrip\nruined\nscope\nsegment\nspectrum\n"
    "stays\nted\nterror\nuh\nva\nventure\nvirtually\nwaited\nwarren\nworn\nyea\nac\n"
    "accompanied\nadams\naids\naimed\nalpha\napproaches\narguing\narrangement\nbeliefs\nboats\nboundaries\nbrick\n"
    "brooklyn\ncolleges\nconsiderable\nconventional\ndanny\ndes\ndesignated\ndvd\nemperor\nemployers\nenormous\nerrors\n"
    "focusing\nforgive\ngains\ngarage\ngathering\nguidelines\nhandled\nhosted\nindians\nindonesia\ninquiry\ninspector\n"
    "jumped\nkhan\nli\nlion\nloaded\nlonely\nmaintaining\nmeasured\nmercy\nnevertheless\nnewspapers\nouter\n"
    "oxygen\npipe\npissed\npoem\npowder\npowered\npromises\nquotes\nracism\nratings\nreads\nrecovered\n"
    "refers\nroy\nrude\nscrew\nseventh\nshelter\nsignature\nsooner\nspider\nstewart\nstrikes\nsuggesting\n"
    "suits\ntoys\ntracking\ntribute\ntrigger\nvary\nvenue\nwages\nwells\nwheels\nye\nabc\n"
    "abortion\naccuracy\nalbert\napplying\nartificial\nbelongs\nbeneath\nbitcoin\nbullet\nburns\ncarl\ncelebrated\n"
    "consistently\nconversion\ncopyright\ncounties\ndemocrat\ndeposit\ndestination\ndirt\ndiverse\ndivine\nemails\ner\n"
    "exclusively\nexport\nfastest\nformerly\nfunctional\ngather\ngrandfather\nhabit\nharvard\nindicates\nisolated\njealous\n"
    "knocked\nlanded\nlaughed\nlaura\nlazy\nmama\nmarshall\nmitchell\nmodified\nmunicipal\nnaval\nneighbors\n"
    "nelson\nneutral\nnoble\noldest\npat\npicks\npoland\npopularity\nprofessionals\npussy\nreactions\nrelate\n"
    "robot\nsacred\nsecurities\nshoe\nspeakers\nsprings\nspy\nsteven\nsuggestions\nsupplied\nsusan\nsuspension\n"
    "terrorism\nterry\ntoxic\ntreasury\ntunnel\nunions\nupgrade\nwarrant\nwider\nwound\naaron\nactively\n"
    "afghanistan\nai\napplies\narrangements\nasset\nassuming\nbacking\nbaker\nbarcelona\nblessed\nbrazilian\nbrush\n"
    "burden\ncampbell\ncarries\ncasual\ncertified\ncharter\nchef\ncivilian\ncoalition\ncock\ncomplain\ncomplaints\n"
    "controversial\ndenver\ndescribing\ndifferently\ndirections\ndiscipline\ndiscussing\ndisgusting\ndj\ndominant\nearning\nemma\n"
    "essay\nexpense\nexplaining\nfurthermore\ngraphic\ngreg\nhealing\nhiring\nhosts\nimplemented\ninstantly\ninvasion\n"
    "jacob\njumping\nlaptop\nlegendary\nleo\nmaker\nmargaret\nmario\nopponents\noutdoor\npalm\nparker\n"
    "photograph\npole\npub\nquarters\nqueensland\nrangers\nranks\nreception\nrecipe\nregulatory\nreviewed\nrolls\n"
    "rubber\nsecured\nserial\nsettings\nshed\nsnake\nsponsored\nstealing\nstrict\nsubsequently\nsubstance\nsuggestion\n"
    "switzerland\nsyndrome\ntasks\ntrips\nultra\nunexpected\nusage\nutah\nworlds\naccidentally\naffordable\namateur\n"
    "appeals\nargentina\nbaltimore\nbatman\nbearing\nbeats\nbin\nbiology\nbobby\nbriefly\ncanal\ncancelled\n"
    "charlotte\ncheaper\nchristopher\nclimb\ncom\ncompeting\ncompletion\ncruise\ncustody\ndelete\ndemonstrated\ndeparture\n"
    "developers\ndevelopments\ndig\neagles\nemployer\nevans\nexplosion\nfever\nfluid\nfolk\ngenerate\ngop\n"
    "handsome\nho\nholidays\nhotels\nimagination\nintegration\nintegrity\ninterpretation\nleaf\nlegitimate\nlightning\nloads\n"
    "longest\nmagical\nmills\nmotivation\nnasty\noliver\noutfit\npension\npermit\nperry\nplates\npleasant\n"
    "portrait\nproductive\nreminds\nreserves\nron\nsafely\nshirts\nshorter\nslight\nsocialist\nstreaming\nsue\n"
    "targeted\ntension\nthailand\ntheories\ntouching\ntransactions\ntwist\nugh\nunemployment\nunity\nuseless\nviewers\n"
    "winds\nwoke\nwtf\nabilities\nadvocate\naims\narc\nbackup\nbeaten\nbitter\nblown\nbranches\n"
    "campaigns\nchips\ncia\nclever\nclinic\nclosest\ncollections\ncontinuous\nconverted\ncorrectly\ncreator\ncreatures\n"
    "criteria\ndeclined\ndetective\ndifficulties\ndisability\ndish\ndouglas\ndu\nduck\negyptian\nep\nevaluation\n"
    "excess\nfarming\nfence\nfifa\nfighters\nflights\nforcing\nforming\nfranklin\nfred\ngradually\ngravity\n"
    "habits\nhawaii\nhighlight\nholder\nhood\nhung\nidentical\nimperial\ninvestigations\njose\nken\nlegally\n"
    "lied\nlistened\nmales\nmanufacturer\nmeters\nnail\nnasa\nnegotiations\nnonsense\nontario\noperational\norleans\n"
    "owns\nphoenix\nplayoffs\npoet\nquoted\nrelating\nrepeatedly\nrobinson\nrolled\nscientist\nsink\nskip\n"
    "slavery\nsnap\nsorts\nsouls\nstole\nswedish\nswim\nswiss\ntennessee\ntransaction\ntransformation\nveteran\n"
    "vulnerable\nwealthy\nadditionally\namy\nattract\nbarbara\nbeta\nblowing\nbored\nbronze\nbug\ncaring\n"
    "catching\ncave\ncheating\nchronic\ncleared\ncommunicate\nconvicted\ncultures\ndealt\ndelayed\ndemonstrate\ndepartments\n"
    "depend\ndeveloper\ndiagnosis\ndismissed\ndistinguished\ndose\neighth\nexperiments\nfa\nflesh\nflip\nforty\n"
    "generous\ngermans\nhated\nhr\nimplement\nincorporated\ninfluenced\njerusalem\nkidding\nlaser\nloyal\nmarijuana\n"
    "md\nmentally\nmissions\noccupation\nopponent\npaintings\npatch\npatience\npic\npointing\npollution\nprecisely\n"
    "prisoner\nprivilege\nproposals\nprotests\npunk\nradar\nregards\nrelatives\nresist\nsolely\nstepped\nstriking\n"
    "terrorists\nth\ntourist\ntransit\ntrucks\ntrusted\nvessels\nvilla\nvolumes\nwebsites\nwireless\nwondered\n"
    "wrap\nwright\nyoga\nadopt\nairlines\nalaska\nalbums\nanytime\nbacteria\nbeings\nbeside\nblade\n"
    "boot\nbottles\nbucks\nbulk\ncamps\ncargo\ncensus\nchristianity\ncoastal\ncoin\ncolored\ncommentary\n"
    "confusion\ncongressional\ncorn\ncried\ncustoms\ndealer\ndeemed\ndestiny\ndistant\nelectronics\nemerging\nemotion\n"
    "emphasis\nethics\nexcitement\nexploration\nfights\nfilling\nfilming\nglasgow\ngraphics\nhelen\nhumor\ninsight\n"
    "invested\njennifer\nlit\nlouisiana\nmar\nmarie\nmeals\nmississippi\nnerve\nnetflix\nnightmare\noperators\n"
    "overnight\npartially\nparticipating\npie\nplatforms\npopulations\nposter\npr\npractically\npreserve\nproduces\nqualify\n"
    "raid\nram\nranging\nranking\nreceives\nrespective\nrestricted\nroutes\nsamuel\nsandy\nscenario\nsheep\n"
    "situated\nslaves\nsony\nspotted\nspreading\nstanley\nsustainable\nsustained\ntaxi\nthemes\nthreatening\ntobacco\n"
    "trace\ntrapped\nturner\nuncomfortable\nwasted\nweakness\nwidespread\nxbox\naccepting\naccessible\nacknowledge\nadvised\n"
    "advisory\nanimation\nassignment\nbalanced\nbare\nbasement\nbases\nbattles\nbias\nbirmingham\nbits\ncancel\n"
    "carpet\nceiling\ncherry\nchill\nclassification\nclue\ncodes\ncole\ncollapse\ncollecting\ncompound\nconscious\n"
    "consecutive\ncontents\ncostume\ncraig\ndeleted\ndevoted\ndidnt\ndisplayed\ndominated\nearl\nendless\nescaped\n"
    "examine\nfloating\ngarbage\ngospel\ngrain\ngrid\ngrows\nheating\nidentification\nknees\nlap\nlions\n"
    "liver\nmetro\nmetropolitan\nmines\nmixture\nnominated\noak\nparliamentary\npatent\nperception\nphysician\nportland\n"
    "proceed\nproceedings\npupils\nreserved\nrestore\nrifle\nrival\nrs\nrunner\nsadly\nsc\nshoulders\n"
    "significance\nsits\nsizes\nslept\nsoap\nspray\nstored\nstressed\nstructural\nsuite\ntbh\ntropical\n"
    "ukrainian\nunnecessary\nverse\nvictor\nvintage\nwarned\nwatson\nacres\nadapted\nadoption\nanonymous\nantonio\n"
    "approaching\nartistic\nattendance\naviation\nbarrel\nbeds\nbeloved\nbless\nboxing\ncelebrating\ncharging\nchemicals\n"
    "chuck\ncinema\ncolonial\ncomics\ncompliance\ncontrary\ncontrolling\ncorporations\ncouch\ncrush\ndam\ndecrease\n"
    "defeated\ndiabetes\ndressing\nexpanding\nfears\nfires\ngenre\ngentle\ngrammar\nhiv\nidk\nillustrated\n"
    "invented\njake\njam\njamie\njessica\nkeith\nkent\nlayers\nlease\nlens\nlicensed\nloyalty\n"
    "madison\nmagnetic\nmetres\nmonsters\nmysterious\nnotion\npartial\npiss\nplacing\npropaganda\nrat\nreflection\n"
    "reminded\nresolve\nrevolutionary\nscandal\nshine\nsi\nsimultaneously\nsubstitute\nsurveillance\ntactics\ntestimony\nthai\n"
    "treasure\ntrophy\ntweet\ntyler\nunderlying\nunfair\nvillages\nvon\nwa\nacceptance\naccidents\naffects\n"
    "annually\napologize\nappreciated\napproached\narriving\nash\naunt\nbenjamin\nblake\nbubble\nbuyers\ncasino\n"
    "charts\nclouds\nconnecting\ncounsel\ncreature\ndeadly\ndecides\nder\ndesired\ndetermination\nembrace\nemerged\n"
    "exhibit\nflew\ngentleman\ngm\nhalloween\nhammer\nhitler\nhosting\nicon\nimposed\nindigenous\ninfinite\n"
    "installation\ninter\ninteractions\nintroducing\niranian\nkicking\nlaying\nlegislature\nliability\nmaine\nmakers\nmanhattan\n"
    "marathon\nmarvel\nmichelle\nmoreover\nmps\nneil\norganisations\nours\nparade\nparadise\nperceived\npics\n"
    "planes\npolitician\npreliminary\npremiere\npresidency\nreaches\nreact\nrealistic\nremarks\nretain\nroberts\nrocky\n"
    "russians\nsaints\nsatisfaction\nscratch\nshade\nsheets\nsheriff\nshy\nsometime\nspirits\nsporting\nstrictly\n"
    "sunshine\nteens\nthou\ntier\ntommy\ntravelling\nvancouver\nvocal\nwarrior\nworries\nyield\naccomplished\n"
    "admission\nadventures\naka\nappearing\nbacon\nbarrier\nbelgium\nbelieving\nblacks\nbombs\nburst\ncaps\n"
    "casting\ncattle\ncc\nclassroom\ncollins\ncolours\ncompromise\nconvenient\ncosta\ncriminals\ncrop\nearthquake\n"
    "elderly\neliminate\nembarrassing\nfarmer\nfinest\ngrants\nharbor\nharvey\nhates\nincidents\ninform\nion\n"
    "jeremy\nlesbian\nlovers\nlt\nmathematics\nmedication\nminded\nmorris\nnorway\npar\npodcast\nportfolio\n"
    "productivity\npromoted\nprotocol\nquietly\nrachel\nreplacing\nresponsibilities\nsalad\nscholarship\nscreening\nsends\nsmiling\n"
    "soup\nsoutheast\nstake\nstating\nstrain\nsuspected\nswift\ntackle\ntigers\ntimeline\ntorture\ntraded\n"
    "translated\ntricks\ntwins\nurgent\nvegetables\nvertical\nviolation\nwallet\nwelsh\nworkshop\nwrapped\naboard\n"
    "abstract\naccent\naddiction\nassociates\nawake\nbeam\nbeans\nbinding\nblank\nbuffalo\ncbs\ncommons\n"
    "conservatives\ncontacts\nconviction\ncorrupt\ncow\ncurve\ndepressed\ndeserved\ndining\ndisorders\nduration\neddie\n"
    "emily\nencouraging\nfarms\nfifteen\nflows\nga\ngenes\ngraduated\ngrandmother\nharsh\nheights\nhorn\n"
    "hurry\nimmune\ninflation\ningredients\ninspection\ninstall\ninstruction\nintensity\ninventory\ninvestigated\ninvitation\njudicial\n"
    "justify\nkyle\nlakes\nlean\nlecture\nlibraries\nlogical\nmason\nmeaningful\nmigration\nmissile\nmotivated\n"
    "muscles\nnancy\nnorman\nnorthwest\nnurses\norgan\npatrol\npearl\npeer\npepper\npig\npile\n"
    "plug\nprovision\nreleasing\nrequiring\nrevised\nrod\nscream\nstairs\nstaring\nstatistical\nsticks\nstrangers\n"
    "succeeded\nsweat\nswitched\nsyrian\ntattoo\nteenage\nthunder\ntours\ntragedy\ntrauma\nvincent\nwrestling\n"
    "zoo\naccordance\nacquire\nactivist\nactivists\naddresses\nalike\napplicable\narrow\navailability\naw\nba\n"
    "bend\nboundary\nbreach\ncabin\ncage\nchancellor\ncheers\ncircles\ncloset\ncombine\ncompanion\ncomparing\n"
    "consciousness\nconsultant\ncontroller\ncorresponding\ncourtesy\ncuba\ndamages\ndemanding\ndisc\ndishes\ndozens\neagle\n"
    "eaten\nembassy\nengaging\nfascinating\nfinancing\nfitted\nflexible\ngaining\ngentlemen\ngoodness\nguilt\nhaven\n"
    "helicopter\nhomework\nhouseholds\nhp\niconic\ninfected\nkeen\nkenya\nlesser\nliberals\nlip\nmandatory\n"
    "manufactured\nmechanics\nmere\nmiracle\nmt\nmud\nmurphy\nnathan\nobservation\noperates\nowe\npermitted\n"
    "phenomenon\npittsburgh\nplayoff\nprecise\nprofession\nprospect\nprotective\nproviders\npublisher\nputin\nreportedly\nretreat\n"
    "rookie\nsandwich\nseeks\nsentences\nseparation\nsexually\nski\nskilled\nsterling\nstuart\nsurgeon\ntheft\n"
    "um\nunderstands\nvalve\nvisa\nwashing\nadjacent\nagreements\nappreciation\narabia\nathletic\nauthorized\nbanner\n"
    "beijing\nblew\nblocking\nbrad\ncaribbean\ncharm\nchasing\nclimbing\ncolony\ncomplaining\ncookies\ncruel\n"
    "curriculum\ndeadline\ndeer\ndelta\ndemanded\ndive\ndivide\neaster\nelectoral\neleven\nentity\nexcessive\n"
    "exercises\nfeminist\ngoverning\nham\nheal\ninterface\nios\njewelry\njournalism\njuan\njulia\njungle\n"
    "linear\nmg\noccasional\noriented\npete\npilots\nprayers\npredicted\npressed\npreventing\nprof\nprovisions\n"
    "pursuit\nrap\nreflected\nreminder\nrestored\nresume\nrev\nrichmond\nridge\nsamsung\nscholars\nsealed\n"
    "sounded\nsri\nstreams\nstrongest\ntends\ntribe\nunfortunate\nvariable\nvictorian\nworrying\nxi\nzones\n"
    "ace\nadjusted\nalternate\narrives\nartwork\nashley\nathlete\nattraction\nbabe\nbankruptcy\ncanon\ncapabilities\n"
    "cared\ncatherine\nchains\nclosure\ncognitive\ncompetitors\nconnecticut\nconvert\ncooked\nct\ncups\ndeciding\n"
    "defender\ndental\ndiplomatic\ndivisions\ndrum\neditorial\nenabled\nentertaining\nest\nestablishing\neternal\nfreeze\n"
    "generic\ngrandma\ngrip\nhandful\nhappily\nharmony\nhmm\nhumble\nhurting\nhybrid\nintentions\ninvesting\n"
    "keyboard\nlasting\nlocally\nloses\nmild\nminimal\nmixing\nmolecular\nnearest\nneighbor\nnoon\nnowadays\n"
    "openly\noverview\npairs\npalestinian\nparish\npathetic\npoems\npossibilities\npotato\npotter\npreference\npromising\n"
    "proportion\npurchases\nrage\nrd\nreflects\nrespected\nrestoration\nselfish\nsergeant\nsilk\nstamp\nthrone\n"
    "thy\nurge\nvoter\nwarner\nwasting\nwitch\nadvantages\nally\narchives\narray\nassisted\nbacks\n"
    "belly\nbooth\nbreakdown\nbridges\nbrutal\ncalculated\ncam\ncentres\nchapters\ncitizenship\ncivilians\ncliff\n"
    "conflicts\nconsensus\ncycling\ndeclaration\ndennis\nderby\ndistinction\ndonations\ndragons\ndraws\nexamined\nfacial\n"
    "faithful\nfatal\nfig\nfitting\ngenuinely\nhardest\nholland\nhonored\nhunger\nhurricane\nimplications\nimport\n"
    "innovative\nipad\njurisdiction\nlaughter\nlemon\nles\nlifted\nloading\nlung\nmatching\nmighty\nmonetary\n"
    "novels\nnutrition\nore\nos\noutcomes\noutta\npine\npolls\npoorly\nportugal\npose\npour\n"
    "proteins\nprovider\npublish\npurely\nralph\nrental\nresolved\nrewards\nsang\nseemingly\nsenators\nseverely\n"
    "shark\nshocking\nsouthwest\nss\nstudios\nsurvivors\ntales\ntechnically\ntitled\ntraditions\nunlimited\nwashed\n"
    "watches\nadvise\nanxious\nappearances\nbee\nbombing\ncafe\ncarlos\nchallenged\ncigarettes\ncolin\nconsisting\n"
    "cult\ndairy\ndakota\ndarling\ndelighted\ndelivering\ndestroying\ndiary\ndisagree\ndisappear\ndrill\nearliest\n"
    "edges\nentries\neuro\nevolved\nexports\nfixing\nfl\nflags\nflies\nforecast\nfr\ngovernance\n"
    "heated\nhug\nimportantly\nindicating\nindoor\ninfluential\nintend\ninvisible\njeans\njets\njulie\nkaren\n"
    "lasted\nlawsuit\nleak\nlighter\nlucas\nmarcus\nmentions\nmeter\nmice\nmusicians\nolive\npassionate\n"
    "potatoes\nprevented\nreceiver\nrecommendation\nriot\nrogers\nroster\nsafer\nsells\nsentenced\nservant\nsetup\n"
    "skull\nslot\nsmash\nstatue\nsurprisingly\nsurrender\nsuspicious\nteenager\ntender\nthoroughly\ntodd\ntreatments\n"
    "tweeted\nvacuum\nvariations\nvi\nwi\nwont\nacknowledged\nadvances\nagrees\nallegations\nanticipated\napprove\n"
    "architect\nbasin\nbeneficial\nbleeding\nbreed\nbreeding\nbride\nbroadway\nbros\nbud\nbutler\ncareers\n"
    "cartoon\ncelebrities\nchick\ncoke\ncomparable\nconfirmation\nconsole\ncontractor\ncontributing\ndiameter\ndubai\ndublin\n"
    "dump\nduo\ndynamics\nelephant\nenhanced\nessays\nexhausted\nfabric\nfabulous\nfairy\nfathers\nfocuses\n"
    "fold\nfreak\nfrustrated\ngambling\ngently\nglorious\ngrief\nharrison\nhistorically\nhub\nhughes\ninevitable\n"
    "investigating\nkg\nlabels\nlacking\nlaughs\nlayout\nlined\nlodge\nlords\nmerchant\nmerit\nmicro\n"
    "myth\nnintendo\nobjectives\nobsessed\norganised\noverwhelming\npale\nparticles\npastor\npenalties\npermanently\npets\n"
    "pockets\npoison\npredict\npresenting\npresidents\npressing\nprints\nprovincial\nraped\nrealised\nrebel\nrepairs\n"
    "rotation\nseparately\nshaking\nshaw\nsocieties\nsolved\nstarring\nstruggles\nsubtle\ntastes\nthrows\ntoll\n"
    "tooth\ntorn\ntragic\ntrainer\ntransformed\nunbelievable\nunderneath\nvariation\nviewing\nviral\nwarehouse\nwears\n"
    "widow\nwives\nadjust\nadministrator\naffecting\nallied\naltogether\nanimated\nanswering\nassess\nassumption\nassured\n"
    "austria\navoided\navoiding\nbasket\nbeard\nbio\nblanket\nbrains\nbucket\nburger\ncapability\ncharming\n"
    "chiefs\ncommented\ncomputing\nconcentrate\nconducting\nconsequence\ncontinent\ncookie\ncruz\ncurse\ndisplays\ndrain\n"
    "emissions\nethical\nexcellence\nflame\nforests\nfreely\nfruits\ngrabbed\ngraduation\nhint\nhorizon\nhostile\n"
    "imagined\ninhabitants\nink\ninn\nintel\nkicks\nlegends\nlo\nlucy\nmagazines\nmatrix\nmeasuring\n"
    "miserable\nmomentum\nmonkey\nmontreal\nmotorcycle\nnationwide\nnest\nnewcastle\nnicely\nninth\nnomination\nnotable\n"
    "obligation\noptical\noutlook\npenny\npetty\nphd\nports\npreserved\nprogrammes\nprospects\npublishers\nquantity\n"
    "quantum\nrainbow\nrebels\nrecognised\nreed\nreign\nresponding\nretained\nrises\nsaves\nscan\nscare\n"
    "sectors\nshorts\nspan\nspecialized\nspencer\nsubmission\nsunny\nsupporter\nte\ntestament\ntoe\ntops\n"
    "tremendous\nvalued\nwounds\nab\naccommodation\nachievements\naddressing\nadorable\nallegedly\nambulance\nar\nashamed\n"
    "assure\nbailey\nballot\nbatteries\nblessing\nbtw\ncemetery\nchambers\ncheat\ncheer\nchile\ncigarette\n"
    "compact\ncompleting\nconsulting\ncooling\ncorners\ndeficit\ndemo\ndemon\ndemonstration\ndetected\ndetection\ndoll\n"
    "donated\nelaborate\nelder\nencountered\nexpertise\nexploring\nfc\nfiber\nfilmed\nfried\ngrocery\nguided\n"
    "guinea\nhalfway\nhappier\nheels\nholmes\nhull\nindependently\nindication\ninsisted\ninstances\nintensive\ninteractive\n"
    "intimate\nlaundry\nlbs\nlifting\nlinda\nmartial\nnigerian\nnortheast\nobserve\npacking\npanels\npassword\n"
    "pokemon\npolitically\npresumably\npretending\npriorities\npronounced\nprosecution\nproves\npulse\npurchasing\nqualities\nqueens\n"
    "rational\nrealm\nreforms\nrevenues\nrides\nripped\nrope\nshadows\nshout\nsierra\nsmartphone\nspecified\n"
    "spectacular\nstan\nstreak\nsubscription\nswitching\ntechnological\ntemporarily\ntolerance\ntourists\ntraditionally\ntraveled\ntreats\n"
    "unhappy\nwhites\nyup\naccomplish\nadequate\nalter\napology\narkansas\nattributed\nbeg\nbelonging\nbooked\n"
    "bout\nbowling\nbrass\nbuzz\nclarke\ncomeback\ncos\ncrops\ndeclare\ndesigners\ndetect\ndiagnosed\n"
    "diesel\ndimensions\ndip\ndisturbing\ndoesnt\ndot\ndresses\ndylan\neffectiveness\neliminated\nellen\nembarrassed\n"
    "exceptional\nfiling\nfled\nfoul\nfrankly\nfreezing\ngraph\nhack\nhannah\nhatred\nignorant\ninfluences\n"
    "interact\njudging\nknights\nlamp\nlimitations\nmajesty\nmeasurement\nmeasurements\nmedian\nmedieval\nmilan\nmobility\n"
    "montana\nmurders\nnc\nne\nnyc\nomg\norientation\noven\nowen\npassport\npenis\npills\n"
    "planets\nproceeds\nrabbit\nraises\nranges\nrats\nretire\nrhythm\nruth\nsavage\nservers\nshook\n"
    "shooter\nsiblings\nslim\nsomeday\nsophisticated\nspam\nspeeds\nstack\nstance\nstatic\nsubway\nsupportive\n"
    "surgical\nsymbols\ntablet\ntent\nthesis\ntide\ntravels\nwallace\nwarfare\nwarming\nweekends\nwithdraw\n"
    "withdrawal\nyoungest\naging\nairline\nalternatives\nanyways\nargues\naudit\nauthentic\nave\nbackwards\nbi\n"
    "blonde\nblows\nbolt\nbrooks\nbugs\nbust\nclearing\nclips\ncollar\ncolumbus\ncomply\ncope\n"
    "counted\ncrashed\ncreepy\ncum\ndenmark\ndivorced\ndonate\ndrawings\ndried\nebay\necho\neditors\n"
    "edwards\nemotionally\nenhance\nexperiencing\nextending\nfinale\nflavor\nfloors\nfreaking\ngloves\nharper\nhart\n"
    "ignorance\nignoring\nimmigrant\ninduced\ninspiring\nintermediate\ninvention\nip\njesse\njoins\njoking\nlgbt\n"
    "likewise\nlineup\nlogan\nmagnificent\nmathematical\nmeantime\nnails\nnevada\nnewest\nnonetheless\nnut\nopposing\n"
    "origins\norlando\nphysicians\npipeline\nplacement\nplanted\npricing\npt\npuerto\nquestioning\nrecreation\nrenewed\n"
    "resigned\nrt\nshallow\nshanghai\nshitty\nsingh\nsins\nsketch\nsmells\nsoda\nspite\nsponsor\n"
    "strengthen\nstrings\nsunset\ntaiwan\nthanksgiving\nthee\nthermal\ntrades\ntransform\nwitnessed\nworkplace\nyelling\n"
    "yorkshire\nachieving\naliens\namsterdam\nanalyst\narabic\narctic\nassists\nbennett\nbristol\nburnt\nbuyer\n"
    "calories\ncannabis\ncease\nchampionships\nchapel\ncloth\nconferences\nconsiders\ncontainer\ncowboys\ncrushed\ndeployed\n"
    "differ\ndimensional\neager\nelect\nelevated\nessence\nexecutives\nflames\nfork\nfur\ngps\nharold\n"
    "harvest\nheadline\nhudson\nhype\nidentifying\nimpacts\ninsist\njo\njunk\nkenny\nkidney\nladder\n"
    "lloyd\nlobby\nmarc\nmechanisms\nmineral\nmob\nmodest\nmotors\nmph\nnavigation\nnicholas\norbit\n"
    "paragraph\npassive\npeninsula\nphillips\npill\npork\nportuguese\nprofitable\nprovinces\nranch\nrays\nreasonably\n"
    "reject\nremainder\nschemes\nscreens\nseized\nsemester\nsentiment\nservants\nshipped\nsocks\nsp\nsr\n"
    "suited\nsupplement\nsurviving\nthereby\nthreshold\ntil\ntin\ntires\ntribal\ntribes\ntrunk\nuncertainty\n"
    "vampire\nvaried\nverdict\nabandon\naccommodate\naccordingly\naesthetic\nalgorithm\naltered\nanchor\nangela\napr\n"
    "arch\nassociations\nau\naudiences\naxis\nbadge\nbernard\nbizarre\nbounce\nbroadcasting\nbs\nbullets\n"
    "buses\ncannon\ncarol\ncarriers\nchairs\ncleaned\ncomplexity\nconfusing\nconsultation\ncontinental\nconvenience\ndeliberately\n"
    "diamonds\ndiana\ndictionary\ndignity\ndimension\ndisappointing\ndiving\ndoug\nduncan\nego\nenthusiasm\nenvironments\n"
    "equation\nextract\nfavorites\nferry\nfisher\nflexibility\nflowing\nfm\nfridge\nfunctioning\nfusion\ngauge\n"
    "goat\ngraduates\ngut\nheck\nhelmet\nholders\nideology\nidiots\ninclusion\ninitiatives\ninnings\ninsects\n"
    "instructor\nisolation\nive\njustified\nkeeper\nlamb\nliar\nmachinery\nmansion\nmega\nmercury\nnamely\n"
    "nbc\nneeding\nnerves\nnhl\nobservations\nordering\npalmer\npaths\npeers\npending\nplatinum\npossess\n"
    "praised\npremises\nprobability\nps\nquestioned\nrefuses\nresignation\nrider\nritual\nruins\nshelf\nslam\n"
    "stakes\nstarter\nsticking\nsubscribe\nsuperman\nsurfaces\nta\nterritories\ntire\ntl\ntowers\ntransfers\n"
    "utterly\nvoltage\nwarn\nwidth\nworkout\naa\nabu\nactivated\nadaptation\nadvisor\naluminum\napartments\n"
    "attitudes\nattorneys\nbail\nbarriers\nbelonged\nbradley\nbrandon\nbroader\nbuck\ncal\ncaroline\ncharacterized\n"
    "civilization\ncongrats\ncontractors\ncreativity\ndealers\ndelicate\nden\nderek\ndesires\ndisappointment\ndisk\nenters\n"
    "evaluate\nformally\nframes\ngoddess\ngov\nhampshire\nharassment\nhats\nhugh\ninsert\njoan\nlebanon\n"
    "leeds\nlegit\nleonard\nliquor\nloser\nmalcolm\nmassage\nmatched\nmessed\nmilwaukee\nmusician\nnato\n"
    "nephew\nnotably\norchestra\noz\npackages\npad\npakistani\nparticipated\nprecision\npreservation\npriests\nprivately\n"
    "prizes\npulls\nqualifying\nreasoning\nrelaxed\nreporters\nroses\nrumors\nsail\nsalmon\nsecretly\nseller\n"
    "sen\nseo\nsheer\nshifts\nsimpson\nsmallest\nspecially\nstark\nstruggled\nsympathy\ntan\nteenagers\n"
    "theoretical\nthumb\ntimber\ntransparent\ntravis\ntweets\ntx\nupside\nurged\nvisitor\nvitamin\nvoid\n"
    "voluntary\nwheat\nwhip\nwipe\nwolves\nwrist\nabused\nacute\nadmiral\namanda\narnold\narrange\n"
    "banana\nbehave\nbetting\nblair\nbo\nborrow\ncamping\ncapitol\nceltic\nchan\nchin\ncivic\n"
    "clerk\nconclusions\nconsiderably\ncontacted\ncottage\ncoup\ncriticized\ncrude\ndash\ndecreased\ndefended\ndemons\n"
    "deposits\ndisclosure\ndisposal\ndistinctive\ndocumented\ndonation\ndragged\ndrone\nencounters\nensuring\nenterprises\nescort\n"
    "exams\nfirmly\nflour\ngdp\ngeneva\nhindu\nholdings\nindie\nindirect\ninspire\ninstitutional\ninterim\n"
    "interviewed\njava\njefferson\njerk\nkarl\nkindly\nkindness\nleaked\nlocals\nlottery\nlouise\nmagnitude\n"
    "mc\nminus\nnhs\nnoting\nnude\norgans\noutlet\noutlets\nparameters\npause\npledge\nportal\n"
    "prescription\nprotesters\nproving\npublicity\npunished\npuppy\nrecruitment\nscrewed\nshades\nshakespeare\nsilicon\nslice\n"
    "spelling\nspurs\nsubscribers\nsurveys\nsurvivor\ntelegraph\ntits\nvaccine\nvinyl\nwestminster\nwished\nwonders\n"
    "accurately\nadelaide\naffiliate\nalfred\nasylum\nbarn\nbent\nbernie\nbrussels\ncathedral\ncentered\nclause\n"
    "cluster\ncomplained\ncompounds\nconsistency\ncr\ncracked\ncylinder\ndancer\ndeaf\ndebts\ndenial\ndigging\n"
    "dock\nentrepreneur\nevident\nexpectation\nexpedition\nexpressing\nextends\nfacilitate\nfailures\nfeat\nfossil\nfounding\n"
    "freight\ngenerating\ngoddamn\nguides\nhonesty\ninappropriate\ninfant\ninitiated\ninjection\ninstrumental\ninsult\ninterference\n"
    "interstate\njulian\nlaunching\nliking\nlinux\nluis\nmates\nmediterranean\nneat\nnegotiate\nneo\nnicole\n"
    "obligations\noffset\noutbreak\npal\npalestine\nperfection\npigs\npirates\nposters\npracticing\npraying\nprobe\n"
    "prohibited\nprojected\npropose\nquarterly\nrecipes\nrecruiting\nrefusing\nrehabilitation\nreid\nremix\nresistant\nreynolds\n"
    "riders\nrobots\nrockets\nroller\nsailing\nshapes\nskinny\nslipped\nsneak\nsolving\nsore\nspark\n"
    "speculation\nsteep\nstevens\nstraw\nsuccessor\ntargeting\ntriggered\ntroubles\nuncertain\nupload\nvector\nviolations\n"
    "weigh\nwhatsoever\nwicked\nabraham\nabsent\nacoustic\nadapt\nancestors\narchive\natomic\nbean\nbicycle\n"
    "bryan\nbump\nbuttons\ncart\ncircus\nclaire\ncocaine\ncohen\ncolleague\ncompelling\ncompiled\ncomplications\n"
    "construct\ncord\ncrowded\ncyber\ndale\ndebates\ndefendant\ndelays\ndense\ndesperately\ndoctrine\nexpose\n"
    "financially\nfreshman\nfurious\ngameplay\ngeography\ngig\nhabitat\nharbour\nhazard\nhydrogen\nimplies\nintact\n"
    "intake\nirrelevant\njaw\njin\nkitty\nlauren\nlawn\nmanufacture\nmartha\nmedals\nmercedes\nmistaken\n"
    "moses\nnashville\nnebraska\nneedle\nol\nolds\norganize\nottawa\noval\npity\npond\nporter\n"
    "portions\nprey\nprophet\nraymond\nrecalled\nreduces\nreferendum\nrefugee\nregulated\nrounded\nruby\nrushed\n"
    "sanders\nsatisfy\nscales\nseasonal\nsegments\nsensible\nsequel\nshifted\nshifting\nshining\nslower\nspinning\n"
    "stanford\nstepping\nteammates\ntouches\ntownship\ntravelled\ntwisted\nusb\nvienna\nwade\nwhale\nwritings\n"
    "admire\naf\namber\nankle\narmor\nautism\nbachelor\nberry\nbillions\nbrady\nbrisbane\nbulls\n"
    "bullying\ncapitalism\ncaution\ncertification\ncharacteristic\nclan\nclash\ncolumns\ncompatible\nconcerts\ncondemned\nconfiguration\n"
    "continuously\nconvincing\ncoupled\ncuriosity\ndelight\ndetermining\nentities\nexceptions\nexplosive\nflooding\nfortunate\nfortunately\n"
    "foundations\nfrontier\nfrustrating\nfrustration\ngeographic\nglenn\ngrande\ngrasp\nhandy\nhardcore\nharmful\nheadache\n"
    "hers\nhispanic\nincentive\ninclusive\ninfections\njackie\njoel\nkissing\nlanes\nlicence\nlungs\nmadness\n"
    "mandate\nmanga\nmemorable\nmerger\nminorities\nnj\noccurring\norganizing\nperforms\nph\npo\npoker\n"
    "portable\npriced\nquebec\nrandomly\nrankings\nrealizing\nresign\nrevealing\nrico\nrobbery\nrub\nrunners\n"
    "sally\nscattered\nscout\nsearched\nsexuality\nshouting\nslap\nsteak\nsuccession\nsuperintendent\nsuspicion\nsweep\n"
    "tactical\ntalents\ntherapist\nthereafter\nthorough\ntuition\ntumor\nusd\nvariables\nvarying\nwholesale\nwwe\n"
    "administered\naffiliated\napples\narchitectural\nartillery\nassembled\nbangladesh\nbarack\nbeaches\nbees\nboarding\nbothered\n"
    "canvas\ncanyon\ncasey\ncheek\nchen\ncincinnati\ncircular\ncirculation\nclearance\ncloses\ncoincidence\ncomedian\n"
    "commands\ncommissioned\nconcentrated\nconscience\ncooler\ncountless\ncurry\ndame\ndeceased\ndedication\ndefining\ndetention\n"
    "disputes\ndrake\nemploy\nenforce\nexplicit\nexplicitly\neyed\nflorence\nflu\nforbidden\nfraction\nhes\n"
    "infantry\nintegral\ninvestor\njanet\njudged\nkatie\nkidnapped\nlectures\nlightly\nlinking\nmaintains\nmarble\n"
    "maritime\nmelt\nmodes\nmonica\nmumbai\nnominee\noath\noffence\npackaging\npatriots\npee\npillow\n"
    "pirate\npolar\nprediction\npreview\nprocessed\npursuing\npuzzle\nrapper\nrebecca\nreconstruction\nrenowned\nrevelation\n"
    "sara\nscholar\nsharks\nshoots\nskirt\nsocially\nspa\nspike\nsprint\nstir\nstuffed\nsubstantially\n"
    "suburbs\nsuperb\nsupposedly\ntab\ntendency\ntheirs\ntoast\ntoes\ntouchdown\ntraits\ntrek\ntricky\n"
    "triumph\nuber\nunderwear\nunto\nviable\nwaist\nwelcomed\nwit\nwreck\nabsurd\naccessories\nadrian\n"
    "advocates\nag\nambitious\namid\nannoyed\nappealing\nappointments\nassumptions\nballet\nbargain\nbinary\nblend\n"
    "blogs\nbrake\nbuilds\nbusinessman\ncab\nch\nchi\ncol\ncollision\ncolombia\ncompassion\nconsumed\n"
    "corrected\ncorrection\ncough\ncousins\ncritic\nczech\ndefenders\ndenying\ndepot\ndistress\ndocumentation\ndoubts\n"
    "dramatically\ndrank\ndudes\neats\nelegant\nelevator\nellis\nexchanges\nexcuses\nexecute\nfactories\nfeast\n"
    "finland\nfrederick\nfrost\ngoin\nherald\nhike\nhollow\nhomeland\nimported\ning\ninternationally\niraqi\n"
    "itunes\nkane\nkissed\nlame\nlicensing\nlily\nlimiting\nlocker\nmainland\nmarking\nmeditation\nmessenger\n"
    "metals\nmissiles\nmunich\nnorwegian\npencil\nphilosophical\npierre\npipes\nplasma\nplea\npunish\npurse\n"
    "quarterback\nreagan\nref\nrelieved\nreplies\nreservation\nrhetoric\nrivals\nrushing\nsalvation\nsanctions\nsecular\n"
    "sensitivity\nshane\nsigh\nsixteen\nsovereign\nspecifications\nspends\nspouse\nstat\nsupervisor\nsynthetic\nteaches\n"
    "tense\nterrifying\ntoyota\ntracked\ntraders\ntroy\nvarieties\nvegan\nwaking\nwalmart\nwang\nwilderness\n"
    "admits\nadviser\naggregate\nanal\nanatomy\nannie\nannounces\napplicants\nautomobile\nbarnes\nbreasts\ncement\n"
    "chess\nciting\ncolonies\ncomposite\nconsequently\nconsist\ncouncils\ncox\ncurtis\ndecorated\ndelegates\ndreaming\n"
    "dull\nenables\nfare\nfashioned\nfeared\nfloat\ngenerator\ngrind\ngrinding\ngrove\nguessing\ngum\n"
    "hobby\nhunters\nidol\nillusion\nincorrect\njun\njunction\nlance\nleap\nlocate\nlocks\nlou\n"
    "lynch\nmanages\nmasses\nmedicare\nmodeling\nmotive\nnazis\nneighbourhood\nnetworking\nnewer\nnewton\noppose\n"
    "optimal\novertime\npacks\npermits\nplaystation\npops\npostal\npredictions\nprep\nprofound\nprosecutor\nrebellion\n"
    "recipient\nrefund\nremembering\nrescued\nrisky\nrobust\nscam\nsci\nsep\nshareholders\nsided\nsimulation\n"
    "sober\nspice\nsqueeze\nstorms\nsupervision\nsuspects\nswap\nswept\nterrain\nterrified\nthemed\nthreaten\n"
    "thrilled\ntowel\ntrio\ntubes\nunconscious\nund\nvaries\nvegetable\nverified\nvibe\nvirtue\nwifi\n"
    "wishing\nworkforce\nzombie\nacre\nairports\nalot\namen\nandrews\narise\nashes\nautomotive\nbattlefield\n"
    "begging\nberkeley\nbloom\nbore\nbundle\nbutterfly\nbuys\ncasualties\ncatches\nchad\nclown\ncommittees\n"
    "conjunction\ncostly\ncows\ncries\ncuban\ncycles\ndarker\ndavies\ndescent\ndesktop\ndial\ndirectory\n"
    "disabilities\ndischarge\ndiscusses\ndodge\ndowns\ndrilling\ndrums\nelimination\nenjoys\nes\nespn\nginger\n"
    "governors\nguild\nhalt\nhan\nhenderson\nibm\nimaging\nimplied\nimpress\ninability\nincoming\nisaac\n"
    "jar\nkay\nlb\nleicester\nliam\nlitigation\nmentor\nmerchandise\nminerals\nminers\nmonk\nneighborhoods\n"
    "ni\nnoah\nnorm\nobtaining\noccupy\noffended\northodox\noverhead\npac\npainter\nperth\npierce\n"
    "pistol\nprinter\nprone\nraiders\nreadily\nreflecting\nregiment\nremembers\nreunion\nrevival\nsanctuary\nsatan\n"
    "satisfying\nseas\nsecuring\nsensors\nseoul\nshells\nsiege\nsixty\nsleeve\nsonic\nsoundtrack\nspeeches\n"
    "spine\nsteering\nsubstances\nsullivan\nsustain\ntenure\ntexture\nthankful\ntranslate\ntreasurer\ntriangle\nunclear\n"
    "upgraded\nvenezuela\nvenice\nvladimir\nwizard\nyankees\nabsorbed\nadmin\naffection\nairplane\naltitude\nathens\n"
    "attributes\nbaked\nbaking\nbeautifully\nbetty\nbiblical\nbmw\nboo\ncardiff\ncollapsed\ncoloured\ncompetent\n"
    "countryside\ncracking\ncrane\ndebris\ndelegation\ndemographic\ndescriptions\ndonor\neasiest\neducate\nenabling\nenrolled\n"
    "enrollment\nessex\nexceed\nexcluding\nexpressions\nfierce\nforgetting\ngabriel\ngarlic\ngaza\ngratitude\nhail\n"
    "heroin\nhonda\nhooked\nillustration\nimpose\nindicator\ninequality\nins\ninterpreted\njamaica\njoey\njoshua\n"
    "journals\nleisure\nlend\nlengths\nleon\nlounge\nluckily\nmanuscript\nmarco\nmarines\nmint\nmolecules\n"
    "montgomery\nnotification\nnova\noakland\noutline\npasta\npi\npolite\nproductions\nprofessors\nquicker\nrandy\n"
    "receipt\nrecognise\nreliability\nresearcher\nretailers\nreviewing\nromans\nrunway\nsculpture\nsenses\nsensor\nseth\n"
    "sharon\nshowcase\nsmoked\nsu\nsubsidiary\ntampa\ntenth\ntheology\ntopped\ntrails\nunderwater\nuploaded\n"
    "velocity\nvenues\nwax\nwikipedia\nwinston\nyay\nyu\naccountability\naerial\nalbeit\nalcoholic\namazed\n"
    "ambition\nammunition\nanthem\narchitects\nautomated\nbake\nbatch\nborrowed\ncarson\ncatalog\ncatalogue\ncharitable\n"
    "christine\nclicking\ncollector\ncompliment\nconsisted\ncontinually\ncoordinator\ndamaging\ndanish\ndef\ndeployment\ndrafted\n"
    "enjoyable\nexotic\nexterior\nfeminine\nfirearms\nfountain\nfury\ngb\ngenocide\nglance\nglow\nhay\n"
    "headlines\nhebrew\nhometown\nhumanitarian\nhungary\nidaho\nimmunity\nimplementing\ninherited\nkillers\nlabeled\nlebron\n"
    "liberation\nlikelihood\nlone\nmassacre\nmeme\nmitch\nmod\nnationalist\nnationals\nnecessity\nnickname\nnixon\n"
    "observer\noffshore\noptional\npapa\nparked\npaste\npioneer\nplaza\nprescribed\npressures\nprosperity\nrecreational\n"
    "reds\nrefuge\nreligions\nrenewable\nrichardson\nricky\nrode\nronald\nsack\nsettlements\nsheffield\nshortage\n"
    "skies\nsmarter\nsmiles\nsophie\nsphere\nsponsors\nstamps\nstare\nsuburban\nsung\nsuppliers\ntablets\n"
    "terribly\nterritorial\nthirds\nthriller\ntoss\ntransgender\ntroubled\nturtle\nur\nverbal\nviolated\nvocals\n"
    "wool\nyang\naccountable\nadvocacy\naftermath\naggression\nanalyzed\nangles\narguably\narmies\narmstrong\nassessed\n"
    "attractions\nballoon\nbeers\nbells\nblamed\nblunt\nboobs\nbosses\nbrakes\nbrigade\nbulgaria\nburial\n"
    "canceled\ncardinal\nchamp\nchampagne\ncheated\nchorus\nchrome\nclarity\nclassics\ncleaner\ncombining\nconclude\n"
    "confidential\ncoordination\ncracks\ncs\ndancers\ndelaware\ndirecting\ndiscretion\nditch\ndome\ndope\ndrought\n"
    "ducks\ndumped\nelevation\nentrepreneurs\nepa\nesteem\neva\nexplored\nfe\nfinances\nfinishes\nfog\n"
    "framed\nfucks\ngesture\nghana\ngibson\ngif\ngilbert\ngosh\ngriffin\nhistorian\nhorizontal\nhospitality\n"
    "hostage\nhottest\nindividually\ninevitably\njeffrey\nkenneth\nlad\nlakers\nlasts\nleagues\nleslie\nlistings\n"
    "literacy\nmarriages\nmigrants\nmins\nmisleading\nmoisture\nmonument\nmortality\nng\nnotices\nobsession\nopt\n"
    "particle\npeanut\npenn\npersistent\npersonalities\npetroleum\npharmaceutical\nprogression\nquinn\nra\nrack\nrebuild\n"
    "recordings\nrejection\nrelaxing\nreservoir\nrespects\nriley\nscrap\nsebastian\nsensation\nshaft\nshepherd\nshuttle\n"
    "slope\nsnack\nsounding\nspecialists\nspotlight\nstabbed\nstern\nstiff\nstriker\nsudan\nsued\nsums\n"
    "sworn\ntel\nterrific\ntheres\ntitans\ntomatoes\ntory\ntrafficking\ntransparency\ntrinity\nunemployed\nunite\n"
    "unlock\nvault\nvet\nvince\nwagon\nwalt\nwithdrawn\naccessed\nadverse\naiming\nallah\nalumni\n"
    "ana\nawhile\naye\nbastard\nbehaviors\nbikes\nbiography\nbr\nbroker\nbrowser\nbury\ncellular\n"
    "cocktail\ncod\nconditioning\nconsuming\ncontracted\ncostumes\ncounseling\ncrews\ncubs\ncuz\ndangers\ndesigning\n"
    "destructive\ndevelops\ndislike\ndoubled\ndoubles\neconomies\nembedded\nemerge\nexcluded\nexpects\nfarewell\nfeeds\n"
    "fist\nfond\nfoolish\nfrog\nfry\ngarcia\ngifted\nhacking\nhawks\nheir\nhighlighted\nholocaust\n"
    "homer\nhon\nhopkins\nimprisonment\nindonesian\nirs\nisnt\njenny\nji\nlacks\nlandlord\nlandmark\n"
    "lanka\nlaunches\nleaning\nliable\nmemphis\nmidst\nmisery\nmodule\nmommy\nmonroe\nmosque\nmoss\n"
    "museums\nmvp\nnursery\nobamacare\nonion\nperspectives\nperu\nphrases\nplague\nplains\npositively\npowell\n"
    "prevents\nprofiles\npursued\nraids\nrecruit\nresting\nrex\nrogue\nroosevelt\nsalaries\nsd\nseated\n"
    "sharply\nshowers\nsincerely\nsings\nsolidarity\nspecialty\nsupernatural\nsurprises\ntd\ntens\nthirteen\ntomb\n"
    "touring\ntraces\ntrademark\ntrim\numbrella\nutilities\nvoyage\nweaker\nwillie\nyields\nabbey\naccepts\n"
    "adjustment\nandrea\nassignments\nattachment\nbaron\nbeatles\nbelfast\nblah\nblaming\nbomber\nbt\nbunny\n"
    "candle\ncarved\nchoir\nclutch\ncoconut\ncommitting\ncomprising\nconfession\nconsume\ncorridor\ncredibility\ncredited\n"
    "critically\ndem\ndistracted\ndm\ndolphins\nestates\nferguson\nferrari\nfilters\nfools\nfourteen\nfu\n"
    "geometry\ngf\nghosts\ngossip\ngp\ngrandparents\nhaul\nheader\nheadphones\nhighways\nholly\nimmense\n"
    "imports\nincentives\ninterfere\nintersection\ninvestigators\njuvenile\nkarma\nki\nknocking\nkurt\nleaks\nleverage\n"
    "lil\nlining\nluther\nmanila\nmankind\nmapping\nmasks\nmed\nmetric\nmilitia\nnaming\nncaa\n"
    "nike\nnode\nobstacles\nopener\noverwhelmed\nperformers\npg\npl\npointless\npoles\npreferences\nprompted\n"
    "proximity\nqualification\nqualifications\nranger\nrendered\nrented\nreversed\nrobbed\nsadness\nscenarios\nselective\nseniors\n"
    "sf\nshiny\nsocialism\nsour\nspoon\nstressful\nstretched\nsucking\nteddy\ntenants\nterrace\nthief\n"
    "transported\ntribunal\nundoubtedly\nuniforms\nverify\nvillain\nwhats\nwhistle\nworkshops\nyale\nyearly\nyemen\n"
    "abusive\nalley\nannouncing\nappetite\nbackyard\nbeth\nbeverly\nbids\nbillboard\nblades\nboris\nbully\n"
    "burke\ncables\ncalculate\ncalculations\nchicks\nconceived\nconsult\ncrashes\ncrowds\ncunt\ndamned\ndissolved\n"
    "distinguish\ndominate\ndynasty\neconomist\nendorsed\neuropeans\nexamining\nextensively\nfda\nfestivals\nforehead\nforeigners\n"
    "forgiveness\ngem\nglen\ngraves\ngregory\nhaunted\nhayes\nheather\nhiking\nhypothesis\nillegally\nillustrations\n"
    "inclined\ninformal\njew\nlearnt\nlending\nmarker\nmarsh\nmarshal\nmaturity\nmaya\nmessy\nmia\n"
    "minneapolis\nmolly\nmorrison\nmtv\nmuhammad\nneighboring\nneighbours\nninja\noptimistic\noutlined\nowl\nparenting\n"
    "peaks\npharmacy\npools\npreparations\nproblematic\nproceeded\nprocessor\npromotional\npros\nprospective\npsychiatric\nregulate\n"
    "renaissance\nrepeal\nreuters\nriots\nroast\nrobertson\nrubbish\nsaga\nsalon\nseventeen\nshields\nsliding\n"
    "sodium\nsurplus\nswallow\nsystematic\ntheaters\ntransmitted\ntuned\nunacceptable\nunaware\nuncommon\nunderway\nunified\n"
    "unstable\nupstairs\nvague\nwee\nwoo\nxd\nzip\nabs\nabundance\nadvancing\nahh\nalberta\n"
    "ant\nantique\nautonomy\nbaptist\nbehavioral\nbiden\nbooking\nbreeze\nbrett\nbrowns\ncanadians\ncarnival\n"
    "commodity\ncongressman\ncontainers\ncooperative\ncoral\ncorrelation\ncorrespondent\ncoupon\ncovid\ncrosses\ncurtain\ncurves\n"
    "defines\ndelivers\ndemonstrates\ndentist\ndodgers\ndough\ndug\nendangered\nenvelope\nexhibited\nfade\nfatigue\n"
    "fellowship\nfictional\nfragile\nfringe\nfulfill\ngaps\ngranite\ngreens\nhandbook\nhardy\nhonors\ninsights\n"
    "instinct\ninviting\nirony\nivan\njoyce\njudgement\njudiciary\njumps\nlads\nlegion\nlethal\nlime\n"
    "lively\nlogistics\nlowered\nlynn\nmaid\nmanning\nmanuel\nmaple\nmickey\nmidfielder\nmindset\nmistress\n"
    "moms\nmon\nmonkeys\nmorality\nmortal\nmounting\nnonprofit\nnsa\noils\noperative\nouts\nowed\n"
    "panama\npatches\npickup\nportraits\npouring\nprestigious\nprompt\nquantities\nradius\nreferee\nrelay\nrig\n"
    "risen\nrows\nsacramento\nscroll\nsearches\nsh\nsmiled\nsnacks\nsnakes\nsovereignty\nstrips\nstunt\n"
    "subjected\nsucked\nsunlight\nsurf\nsymbolic\nsync\ntaxpayer\ntempted\nthrust\ntrevor\ntrilogy\nurl\n"
    "weights\nwheelchair\nwhore\nwiped\nyahoo\nyoure\nyourselves\naccompanying\naccusations\nacids\nadministrators\naired\n"
    "allowance\nandre\napologies\narbitrary\natm\nautonomous\naveraged\nbait\nbark\nbets\nblogger\nbra\n"
    "brighton\nbrotherhood\nbuddhist\nbuilder\ncakes\ncarriage\ncelebrations\ncensorship\ncf\ncl\nclarify\nclimbed\n"
    "comp\ncompilation\ncomposer\ncomprises\nconstitute\ncorrespondence\ncowboy\ndefendants\ndesirable\ndevastating\ndiagram\ndismiss\n"
    "editions\nerected\nexplorer\nfarther\nfavorable\nfeminism\nflaws\nforums\nfreed\ngalleries\ngasoline\ngenesis\n"
    "geographical\ngoverned\ngovernmental\ngrandson\nhalls\nhandles\nheavier\nherbert\nhints\nincomplete\nincorporate\ninterrupted\n"
    "ivory\nkerry\nkirk\nlang\nlengthy\nlevy\nlp\nmanipulation\nmerchants\nmisses\nmlb\nmock\n"
    "necklace\nniche\nnina\nobscure\not\npara\npeterson\npopped\nporch\nportrayed\npossessed\nprinceton\n"
    "proposition\nrailways\nreadings\nrecession\nrichards\nrim\nseals\nsecondly\nsequences\nsettling\nsherman\nspinal\n"
    "spiral\nspit\nsplash\nstretching\nsuccessive\nsuperhero\ntaxpayers\ntherapeutic\nthreads\nti\ntimely\ntomato\n"
    "tub\nufc\nundergraduate\nundertaken\nuranium\nutter\nvietnamese\nvolleyball\nwalsh\nwires\nyell\nadvertisement\n"
    "analysts\nanalyze\natmospheric\nbangkok\nbatting\nbb\nbitches\nbracket\nbranded\nbryant\ncairo\ncardiac\n"
    "catholics\ncommanding\nconfirms\nconfronted\ncrashing\ncrawford\ncreep\ndaylight\ndee\ndems\ndevon\ndisclose\n"
    "doe\ndonna\nelbow\nencourages\nenthusiastic\nenvy\nestablishments\nexile\nexploitation\nfelix\nfutures\ngel\n"
    "genetics\ngoose\ngrill\ngrounded\nhating\nheel\nheroic\nhut\ninmates\ninstructed\nira\njenkins\n"
    "johns\nknives\nlouisville\nmalaysian\nmargins\nmarina\nmat\nmelissa\nmilton\nmiranda\nml\nmonopoly\n"
    "nash\nnationally\nnobel\nnorfolk\noutrage\nowning\npains\npaperwork\npdf\npitched\npoets\npoisoning\n"
    "promptly\nque\nrains\nrecovering\nrenewal\nrepeating\nrifles\nrobbie\nruler\nscreams\nsellers\nsights\n"
    "sincere\nskating\nskiing\nslaughter\nsmashed\nsox\nsperm\nspill\nsteadily\nstripped\nsupplier\nswamp\n"
    "swan\nswitches\nsynthesis\ntasty\ntattoos\nteammate\ntestify\ntolerate\ntournaments\ntravelers\ntreason\ntrustees\n"
    "typing\nurine\nvanilla\nvermont\nvic\nvii\nviolet\nweighing\nwendy\nactivation\nafghan\nafterward\n"
    "agreeing\nahmed\nallocated\nappealed\napplause\nbald\nbarrels\nboil\nborough\nboyd\nbp\nbreakthrough\n"
    "calif\nce\ncharities\ncheering\nchooses\nchurchill\ncombinations\ncommenting\ncompetitions\ncone\nconnects\nconvey\n"
    "critique\ncrushing\ncurved\ncyrus\ndecay\ndeclining\ndepressing\ndessert\ndestinations\ndiagnostic\ndiane\ndifferential\n"
    "discourse\ndistances\ndominance\ndonors\ndownloaded\neconomically\nentertain\nevaluated\nexploit\nfireworks\nflown\nfloyd\n"
    "founders\nfreeman\ngandhi\ngateway\nge\nguarantees\nhumidity\nhumour\nimagery\nimply\nindicators\ninherent\n"
    "inland\ninning\ninnocence\ninvestigator\nisle\nivy\njustification\nka\nkatherine\nlego\nlicenses\nlivestock\n"
    "liz\nllc\nmafia\nmanners\nmerry\nmick\nmissionary\nnationalism\nnaughty\nnepal\nnewman\nnotified\n"
    "notorious\nobey\nolivia\norganizational\noutfits\noutright\noverly\noversight\npanthers\npersian\nphases\nphotographers\n"
    "polling\npopping\nprisons\nprototype\npumpkin\npumps\npunched\nramp\nrand\nreactor\nreef\nrefined\n"
    "refreshing\nrefusal\nreinforced\nremedies\nreset\nsage\nshave\nsickness\nsimpler\nsinking\nslots\nsorted\n"
    "sq\nstaged\nstartup\nstatute\nstems\nstraightforward\nstrengths\nsuffers\nsuperstar\ntelecommunications\nthieves\nthoughtful\n"
    "thru\ntissues\ntoddler\nutilized\nvicious\nvictories\nvikings\nvodka\nvr\nwholly\nzoom\naccidental\n"
    "accounted\naddicted\nadjustments\napollo\narchbishop\nassassination\nathletics\nbasics\nbats\nbelgian\nbibliography\nbot\n"
    "broadly\ncalcium\ncalvin\ncandles\ncapita\ncertainty\ncheeks\nchickens\nchristina\ncitation\nclues\ncollectively\n"
    "commercials\ncommissions\ncompression\ncomprised\nconfess\nconfined\ncongregation\nconsolidated\ncoordinate\ncoordinates\ncube\ndana\n"
    "declaring\ndecoration\ndecree\ndefinitions\ndeliberate\ndespair\ndiscovering\ndividend\ndragging\ndrift\ndye\neden\n"
    "educators\nelectron\nendure\nenzyme\nevolutionary\nexhibits\nextensions\nfellows\nfragments\nfraser\nfuels\ngeological\n"
    "globally\ngrams\nguru\nhacked\nhans\nhatch\nhindi\nhistorians\nhm\nhormone\ninadequate\nindianapolis\n"
    "infinity\nintentionally\njoints\nkilometers\nlabs\nlace\nlibya\nlosers\nlouder\nmaiden\nmarching\nmarketplace\n"
    "membrane\nmessing\nmetallic\nmethodology\nmodifications\nmonitors\nmurderer\nnap\nnickel\nniece\nnm\nnominations\n"
    "numbered\nofferings\noverlooked\npardon\npartnerships\npersuade\npier\npoured\npracticed\npredecessor\npremise\nquiz\n"
    "rainfall\nrecipients\nreckless\nredemption\nrelates\nrelied\nremedy\nreplay\nrevision\nrooted\nscent\nslate\n"
    "spells\nstimulus\nstrengthening\nstructured\nsunrise\nsurge\ntagged\ntags\ntapes\ntee\ntestified\ntimothy\n"
    "token\ntornado\ntracy\ntunes\ntunnels\ntwilight\nunprecedented\nvagina\nverses\nvocabulary\nwellington\nwhoa\n"
    "willingness\nwoody\nworthless\nyacht\naberdeen\nabsorb\naccompany\naccord\nadvancement\nalbany\nalgorithms\nalt\n"
    "alternatively\nanglo\narcher\nasap\nassurance\nbarber\nbash\nbattalion\nbidding\nboycott\nbricks\nbruno\n"
    "buddies\nbulgarian\ncarpenter\nceased\nchester\ncoding\ncompetitor\ncreators\ncuisine\ndetained\ndioxide\ndolls\n"
    "doom\ndubbed\nea\neclipse\neighteen\neleanor\nelephants\nenjoyment\nexhaust\nexpired\nflee\nforbes\n"
    "forwards\nfries\nfundraising\ngal\nglimpse\nhahaha\nhawk\nhealthier\nhomemade\nhonorable\ninfectious\ninferior\n"
    "injustice\ninquiries\ninsulin\ninterpret\nintro\njackets\njill\nkindle\nlid\nlindsay\nlogs\nmanor\n"
    "masterpiece\nmelody\nmemo\nmic\nmirrors\nmyanmar\nnarrator\nnate\nnets\nnsw\nobesity\npartisan\n"
    "planting\npony\nposed\npossessions\nprivileged\nprolonged\npromo\nprotestant\npumping\npupil\nqb\nrecruited\n"
    "reliance\nrelies\nreluctant\nrelying\nrespiratory\nretention\nrewarded\nribbon\nrochester\nrodgers\nroommate\nrotten\n"
    "sands\nschedules\nselecting\nshah\nshawn\nshotgun\nsingers\nsnapped\nsofa\nsolomon\nsouthampton\nspoil\n"
    "spoiled\nstephanie\nsubmarine\nsuburb\nsurgeons\nsympathetic\ntaxation\ntemper\nundergo\nvenus\nweighed\nwu\n"
    "acquiring\nadditions\nadmitting\nafl\naligned\nallan\naltar\namp\narrows\natlas\naustrian\nautomation\n"
    "awe\nbalancing\nbanning\nbishops\nboeing\nbroncos\nbuilders\nburton\ncaesar\ncans\ncarroll\ncavalry\n"
    "clara\ncoffin\ncollectors\ncolorful\ncombo\ncommunism\nconductor\nconfront\nconstraints\ncrow\ndavidson\ndecisive\n"
    "decorative\ndefinitive\ndisclosed\ndisplaced\ndisturbed\ndiy\ndoin\nepidemic\neternity\neugene\nevolve\nexplode\n"
    "extraction\nfatty\nfilthy\nfletcher\nflush\nfont\nfreestyle\nglue\ngrandpa\nhairy\nhomicide\nhorns\n"
    "ie\ninheritance\nintroduces\nironic\nlacked\nlin\nluggage\nlyon\nmadame\nmaggie\nmarion\nmel\n"
    "melting\nmessaging\nmicrowave\nmidwest\nminimize\nmodi\nmorocco\nnatalie\nops\norganisms\noriginated\nounce\n"
    "pablo\npeel\npensions\nperformer\npicnic\npins\npractitioners\npredominantly\nprimitive\nprovidence\npsychic\npsychologist\n"
    "puppet\nreproductive\nrequesting\nresponds\nrestrict\nretiring\nretrieved\nribs\nrighteous\nrivalry\nrosa\nroyalty\n"
    "sandra\nsausage\nseize\nsim\nskeleton\nspicy\nsticky\nsting\nsufficiently\nthankfully\nthrones\ntick\n"
    "traced\ntrent\ntrusts\ntutorial\ntwentieth\nunpleasant\nunrelated\nussr\nvacant\nvent\nvicinity\nwan\n"
    "wandering\nwardrobe\nwarmth\nweaknesses\nwines\nwired\namendments\nanalyses\nasses\nassessments\nassisting\naxe\n"
    "backgrounds\nbaldwin\nbelle\nbf\nbites\nbombers\nbonuses\nbred\nbrexit\nbubbles\nbuddha\nbulletin\n"
    "capitalist\ncautious\nclinics\ncommitments\ncompanions\ncomparisons\nconstable\ncooperate\ncoordinated\ncopied\ncounselor\ncp\n"
    "curb\ndances\ndarren\ndeeds\ndestined\ndetached\ndevils\ndiscounts\ndistribute\ndong\nedgar\nefficiently\n"
    "eliminating\nelliott\nencouragement\nenforced\nevan\nexplosives\nfaction\nfascist\nfeathers\nfixtures\nflooded\nfuller\n"
    "gamble\ngoalkeeper\ngrandchildren\ngt\nguardians\nharmless\nhearings\nhesitate\nhid\nhips\nhopeful\nhorny\n"
    "hungarian\nhygiene\niceland\nimaginary\nimprisoned\ninconsistent\nint\niso\njared\njohnston\njudy\nkindergarten\n"
    "latino\nlopez\nloudly\nmechanic\nmegan\nmls\nmodify\nneglect\nnorthwestern\nnz\noffenders\noppression\n"
    "patriotic\nphillip\npictured\npitcher\nplayground\npopulated\nposes\npositioned\nprejudice\npreston\nprobable\nprobation\n"
    "projection\npromotes\npumped\nrails\nraven\nreceptor\nrehab\nremake\nrendering\nreproduction\nres\nreservations\n"
    "rey\nrhode\nshrimp\nsimilarities\nskins\nslopes\nspelled\nspokesman\nspringfield\nstained\nstall\nstarving\n"
    "strap\nsubjective\nsurround\nsurroundings\nsweeping\nswinging\ntearing\ntraumatic\ntrillion\ntucker\nvatican\nvendor\n"
    "watts\nyr\nabbott\naboriginal\nacademics\nadopting\nalignment\nallergic\nallison\namended\napparatus\nassumes\n"
    "avengers\nbackpack\nbalcony\nbanker\nbliss\nbodily\nbuffer\ncalgary\nchapman\nchopped\ncollaborative\ncommenced\n"
    "compensate\ncompromised\nconstructive\nconventions\ncosmic\ncrystals\ndaisy\ndefinite\ndemonstrations\ndeparted\ndepths\ndevelopmental\n"
    "disco\ndistraction\ndom\ndorothy\ndoses\ndrawer\ndrones\ndurham\necological\necosystem\nelvis\neuros\n"
    "exclude\nexempt\nexposing\nfaint\nfertility\nff\nfines\nfinn\nfloods\nflynn\nfoam\nfolded\n"
    "foremost\nforge\ngreenhouse\nhears\nhierarchy\nideals\nidentities\ninstallations\ninvalid\njade\njointly\njung\n"
    "kits\nlancaster\nlightweight\nlowering\nmb\nmelted\nmetabolism\nneglected\nnegotiated\nnegotiating\nnegotiation\nnewborn\n"
    "newport\nnodes\nnotch\nomega\nonions\npackers\npaired\nparental\nparody\nparole\nparticipant\npenguin\n"
    "phantom\nphotoshop\npitt\nprecedent\nprevalent\nprom\npromotions\npython\nqatar\nquestionable\nqueue\nquo\n"
    "regrets\nrender\nrespondents\nretaining\nromania\nsailor\nseventy\nshouted\nsimmons\nsims\nslides\nsociology\n"
    "somerset\nsoo\nspecify\nsplitting\nstab\nsupermarket\nsweater\ntenant\ntensions\nthomson\ntortured\ntraction\n"
    "tractor\ntrout\nturnover\nuganda\nunwanted\nupgrades\nvariant\nvegetarian\nvernon\nvisibility\nwarnings\nwherein\n"
    "whiskey\nworms\nwyoming\naaa\nabundant\nafricans\nalexandria\nalgebra\nanalytics\nantenna\nattribute\naudition\n"
    "bankers\nbiting\nbranding\nbravo\nbusted\ncardinals\ncarrie\ncertificates\ncharleston\nchatting\nchop\ncircuits\n"
    "clifford\ncody\ncoleman\ncommanded\ncommissioners\ncommunicating\ncomparative\ncomplement\nconnor\nconquer\nconquest\ncontested\n"
    "continuity\ncornwall\ncrawl\ncredible\ncursed\ndb\ndeepest\ndefects\ndelightful\ndepicted\ndetermines\ndigit\n"
    "dinosaur\ndoomed\ndrainage\ndrowning\nembarrassment\nequations\nevolving\nexploded\nfairness\nfavored\nfelony\nflats\n"
    "flint\nfloral\nfortress\nfulfilled\nfundamentally\ngrabbing\nguts\nhairs\nhammond\nhanding\nhearted\nherb\n"
    "herd\nhusbands\nideological\nimmortal\nincumbent\ninsider\ninsufficient\ninterval\njelly\nkai\nkanye\nkidnapping\n"
    "kilometres\nky\nlenses\nlick\nliteral\nlunar\nmaternal\nmatthews\nmaxwell\nmccain\nmcdonald\nmedicines\n"
    "memoir\nmessi\nmiguel\nmodification\nmold\nnailed\nnapoleon\nneighbouring\nnigel\nobjection\nobliged\nobservers\n"
    "occurrence\noffspring\nou\noutrageous\npacket\npads\npatents\npathway\npeach\npersuaded\nplots\npolo\n"
    "presenter\nproclaimed\nprohibition\nprop\nrecognizing\nrecommends\nregistry\nrelieve\nremarkably\nrepaired\nrotating\nsanchez\n"
    "sandwiches\nsatellites\nscar\nscouts\nscripture\nseating\nseminar\nshores\nsilva\nsimplicity\nslightest\nsoftly\n"
    "specimens\nstarbucks\nstereo\nsupplements\nsurrey\nsustainability\nsymphony\ntesla\ntextbook\ntheological\ntrader\nundercover\n"
    "valentine\nvegetation\nvein\nvelvet\nvendors\nviewer\nwebb\nwelcoming\nwhales\nwheeler\nworm\nzombies\n"
    "accountant\nactivate\nadmissions\nalison\n"
    ;

}  // namespace imp::data
