public class Safe {
    void ring(android.app.Notification.Builder builder, android.net.Uri tone) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            builder.setSound(tone);
        } else {
            builder.setSound(tone);
        }
    }
}
