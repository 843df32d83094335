public class Doubler {
    void buzzTwice(android.os.Vibrator v, long d) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(VibrationEffect.createOneShot(50, 175));
        } else {
            v.vibrate(d * 2);
        }
    }
}
